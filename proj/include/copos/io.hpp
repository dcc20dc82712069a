#pragma once

#include <copos/engine.hpp>
#include <copos/error.hpp>
#include <copos/rational.hpp>
#include <copos/symmetric_matrix.hpp>

#include "json.hpp"

#include <cctype>
#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace copos::io {

namespace detail {

inline bool allDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

inline std::string_view stripSign(std::string_view s, bool& negative) {
  negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  return s;
}

}  // namespace detail

/// Accepts "p", "p/q", and, when `acceptDecimal` is set, finite decimals
/// such as "-0.25" which are converted exactly.
inline Rational parseRational(std::string_view token, bool acceptDecimal = false) {
  auto fail = [&](const char* why) -> Rational {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(token) + "': " + why);
  };
  bool negative = false;
  std::string_view body = detail::stripSign(token, negative);

  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!detail::allDigits(num) || !detail::allDigits(den)) fail("expected digits around '/'");
    BigInt q{std::string(den)};
    if (q == 0) fail("zero denominator");
    BigInt p{std::string(num)};
    return Rational(negative ? BigInt(-p) : p, q);
  }
  if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    if (!acceptDecimal) fail("decimals are rejected (use p/q or --accept-decimal)");
    const auto whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if ((!whole.empty() && !detail::allDigits(whole)) || (!frac.empty() && !detail::allDigits(frac)) ||
        (whole.empty() && frac.empty())) {
      fail("expected digits around '.'");
    }
    BigInt p{std::string(whole.empty() ? "0" : whole) + std::string(frac)};
    BigInt q = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    return Rational(negative ? BigInt(-p) : p, q);
  }
  if (!detail::allDigits(body)) fail("expected an integer, p/q");
  BigInt p{std::string(body)};
  return Rational(negative ? BigInt(-p) : p);
}

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

/// Matrix file: the order n on the first line, then n lines of n rationals.
/// Blank lines after the last row are ignored.
inline SymmetricMatrix parseMatrix(std::istream& in, bool acceptDecimal = false) {
  std::string line;
  std::size_t lineNo = 0;
  auto nextLine = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };
  if (!nextLine()) throw Error(ErrorCode::ParseError, "empty matrix file");
  const auto header = tokens(line);
  if (header.size() != 1 || !detail::allDigits(header[0]) || header[0].size() > 6) {
    throw Error(ErrorCode::ParseError, "first line must hold the matrix order");
  }
  const std::size_t n = std::stoul(header[0]);
  if (n == 0) throw Error(ErrorCode::ParseError, "matrix order must be at least 1");

  std::vector<RationalVector> rows;
  while (nextLine()) {
    auto toks = tokens(line);
    if (toks.empty()) continue;
    if (rows.size() == n) throw Error(ErrorCode::DimensionMismatch, "non-square data: more than " + std::to_string(n) + " rows");
    if (toks.size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "non-square data: line " + std::to_string(lineNo) + " has " +
                                                    std::to_string(toks.size()) + " entries, expected " +
                                                    std::to_string(n));
    }
    RationalVector row;
    for (const auto& t : toks) {
      try {
        row.push_back(parseRational(t, acceptDecimal));
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, std::string(e.what()) + " at line " + std::to_string(lineNo));
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "non-square data: found " + std::to_string(rows.size()) +
                                                  " rows, expected " + std::to_string(n));
  }
  return SymmetricMatrix::fromRows(rows);
}

inline SymmetricMatrix parseMatrix(const std::string& text, bool acceptDecimal = false) {
  std::istringstream in(text);
  return parseMatrix(in, acceptDecimal);
}

inline std::string formatVector(const RationalVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += to_string(v[i]);
  }
  return out;
}

inline std::string formatMatrix(const SymmetricMatrix& m) {
  std::string out = std::to_string(m.order()) + "\n";
  for (const auto& row : m.rows()) out += formatVector(row) + "\n";
  return out;
}

/// A witness is the first nonblank line of rationals.
inline RationalVector parseWitness(std::istream& in, bool acceptDecimal = false) {
  for (std::string line; std::getline(in, line);) {
    auto toks = tokens(line);
    if (toks.empty()) continue;
    RationalVector x;
    for (const auto& t : toks) x.push_back(parseRational(t, acceptDecimal));
    return x;
  }
  throw Error(ErrorCode::ParseError, "witness file holds no values");
}

/// Schema: docs/report-schema.json.
inline nlohmann::json reportJson(const SymmetricMatrix& a, const Verdict& v, bool strict) {
  nlohmann::json j;
  j["verdict"] = std::string(to_string(v.kind));
  j["strict"] = strict;
  j["order"] = a.order();
  if (v.witness) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : *v.witness) w.push_back(to_string(x));
    j["witness"] = w;
    j["value"] = to_string(evaluateQuadratic(a, *v.witness));
  } else {
    j["witness"] = nullptr;
    j["value"] = nullptr;
  }
  j["stats"] = {
      {"matricesProcessed", v.stats.matricesProcessed},
      {"maxFrontierSize", v.stats.maxFrontierSize},
      {"maxDepth", v.stats.maxDepth},
      {"worstCaseBound", v.stats.worstCaseBound.str()},
      {"duplicatesSkipped", v.stats.duplicatesSkipped},
  };
  return j;
}

}  // namespace copos::io
