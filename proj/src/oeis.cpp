// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#ifdef LATWALK_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif

#include "latwalk/oeis.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "httplib.h"
#include "json.hpp"
#include "latwalk/errors.hpp"

namespace latwalk {
namespace {

std::string joined_terms(const std::vector<BigInt>& terms, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) os << sep;
    os << terms[i];
  }
  return os.str();
}

std::vector<OeisMatch> parse_results(const std::string& body,
                                     const std::string& origin) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("malformed lookup response from " + origin + ": " +
                          e.what());
  }
  std::vector<OeisMatch> out;
  if (!doc.contains("results") || doc["results"].is_null()) return out;
  for (const auto& entry : doc["results"]) {
    OeisMatch m;
    const long long number = entry.value("number", 0LL);
    char id[16];
    std::snprintf(id, sizeof id, "A%06lld", number);
    m.id = id;
    m.name = entry.value("name", std::string{});
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<OeisMatch> lookup_online(const std::vector<BigInt>& terms) {
  const std::string path =
      "/search?q=" + joined_terms(terms, ',') + "&fmt=json";
#ifdef LATWALK_HAVE_OPENSSL
  const char* base = "https://oeis.org";
#else
  const char* base = "http://oeis.org";
#endif
  std::string last_error;
  for (int attempt = 0; attempt < 2; ++attempt) {
    httplib::Client client(base);
    client.set_connection_timeout(5, 0);
    client.set_read_timeout(10, 0);
    client.set_follow_location(true);
    auto res = client.Get(path);
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status != 200) {
      last_error = "HTTP status " + std::to_string(res->status);
      continue;
    }
    return parse_results(res->body, base);
  }
  throw NetworkError("sequence lookup failed after retry: " + last_error);
}

std::vector<OeisMatch> lookup_fixture(const std::vector<BigInt>& terms,
                                      std::string dir) {
  if (dir.empty())
    if (const char* env = std::getenv("LATWALK_OEIS_FIXTURES")) dir = env;
  if (dir.empty())
    throw ValidationError(
        "fixture mode needs a directory (argument or LATWALK_OEIS_FIXTURES)");
  const std::string file = dir + "/" + oeis_fixture_name(terms);
  std::ifstream in(file);
  if (!in)
    throw ValidationError("missing lookup fixture: " + file);
  std::ostringstream body;
  body << in.rdbuf();
  return parse_results(body.str(), file);
}

}  // namespace

std::string_view oeis_mode_name(OeisMode m) {
  switch (m) {
    case OeisMode::Off: return "off";
    case OeisMode::Online: return "online";
    case OeisMode::Fixture: return "fixture";
  }
  throw std::logic_error("unmapped lookup mode");
}

std::optional<OeisMode> oeis_mode_from_name(std::string_view name) {
  if (name == "off") return OeisMode::Off;
  if (name == "online") return OeisMode::Online;
  if (name == "fixture") return OeisMode::Fixture;
  return std::nullopt;
}

std::string oeis_fixture_name(const std::vector<BigInt>& terms) {
  std::string joined = joined_terms(terms, '_');
  for (auto& c : joined)
    if (c == '-') c = 'm';
  return joined + ".json";
}

std::vector<OeisMatch> oeis_lookup(const std::vector<BigInt>& terms,
                                   OeisMode mode,
                                   const std::string& fixture_dir) {
  if (terms.empty()) throw ValidationError("sequence lookup needs terms");
  switch (mode) {
    case OeisMode::Off: return {};
    case OeisMode::Online: return lookup_online(terms);
    case OeisMode::Fixture: return lookup_fixture(terms, fixture_dir);
  }
  throw std::logic_error("unmapped lookup mode");
}

}  // namespace latwalk
