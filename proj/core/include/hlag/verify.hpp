#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hlag/freeness.hpp"
#include "hlag/lagrangian.hpp"

namespace hlag {

/// Exact bound stored as an integer pair.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational reduced(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
};

enum class RowKind {
  Upper,        ///< computed <= bound + tolerance
  StrictUpper,  ///< computed < bound
  Equality,     ///< |computed - bound| <= tolerance
};

struct VerificationRow {
  std::string id;
  std::string family;
  std::string n_range;
  std::string bound_text;  ///< exact rational or the reference it is compared with
  double bound = 0;
  RowKind kind = RowKind::Upper;
  double tolerance = 1e-7;
  double computed = 0;
  double margin = 0;  ///< bound - computed (Upper kinds), -|bound - computed| (Equality)
  bool pass = false;
};

VerificationRow make_row(std::string id, std::string family, std::string n_range, std::string bound_text,
                         double bound, RowKind kind, double tolerance, double computed);

struct CaseSuiteConfig {
  int n_lo = 8;
  int n_hi = 14;
  SolverConfig solver;
};

/// Closed forms, the fourteen case bounds with their link identities and
/// uncovered-pair reductions, the K_5^3 minus two edges bound and the
/// one-dimensional bound.
std::vector<VerificationRow> verify_cases(const CaseSuiteConfig& cfg = {});

struct TheoremConfig {
  int n_max = 8;
  int star_trend_max = 14;
  SolverConfig solver;
  EnumerationConfig enumeration;
};

struct TheoremSummary {
  std::vector<ExtremalSearch> searches;
  std::vector<VerificationRow> rows;
  bool pass() const;
};

/// Exhaustive left-compressed M_2^4-free search for 4 <= n <= n_max, the
/// star/non-star dichotomy at each n, and the trend of 4! λ(star(n, 4)).
TheoremSummary verify_theorem(const TheoremConfig& cfg = {});

bool all_pass(const std::vector<VerificationRow>& rows);
std::string rows_to_text(const std::vector<VerificationRow>& rows);
std::string rows_to_json(const std::vector<VerificationRow>& rows);

/// 9(n-2)(n-3) / (512 (n-1)^2)
Rational star_lambda_exact(int n);

}  // namespace hlag
