#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tightgraphs/drg.hpp"
#include "tightgraphs/numeric.hpp"
#include "tightgraphs/srg.hpp"

namespace tightgraphs {

// Classical parameters (D, b, alpha, beta). b is a nonzero integer; alpha
// and beta may be rational.
struct ClassicalParams {
  int diameter = 0;
  long long b = 0;
  Rat alpha, beta;
};

// Gaussian bracket [i]_b = 1 + b + ... + b^{i-1}; [0] = 0. b may be
// negative but not zero.
Int gaussian_bracket(int i, long long b);

// b_i = ([D]-[i])(beta - alpha [i]), c_i = [i](1 + alpha [i-1]).
// Throws std::domain_error when any entry fails to be a positive integer
// where required.
IntersectionArray classical_to_array(const ClassicalParams& p);

// beta = 1 + alpha [D-1] with b > 0 and alpha > 0.
bool is_tight_classical(const ClassicalParams& p);

// Local parameters forced on a tight graph with these classical parameters:
// v = b_0, valency a_1 = alpha (b+1) [D-1], lambda = (alpha-1)(b+1) +
// alpha b [D-2], mu = alpha (b+1), eigenvalues r = alpha b [D-2], s = -1-b.
// Requires is_tight_classical and integral outputs.
SrgParams local_params_classical(const ClassicalParams& p);

struct Verdict {
  enum class Status { Excluded, Consistent, Inapplicable, Infeasible, MustBeOa, MustBeSteiner };
  Status status = Status::Inapplicable;
  std::string rule;  // e.g. "Thm6.2(i)"; empty when no rule fired
  // key=value pairs in emission order
  std::vector<std::pair<std::string, std::string>> computed;

  std::string status_string() const;
  void add(const std::string& key, const std::string& value) { computed.emplace_back(key, value); }
  std::string line() const;  // "<STATUS> rule=... key=value ..."
};

// Case analysis for tight classical parameter sets with integral b >= 2:
// alpha = b forces c_2 = (1+b)^2 on a locally-OA-excluded configuration,
// alpha = b+1 forces c_2 = (1+b)(2+b) on the locally-Steiner side. Both are
// excluded; anything else is consistent with these rules. Non-tight input
// and b < 2 are inapplicable. Requires diameter >= 3.
Verdict screen_tight_classical(const ClassicalParams& p);

// Local data of a Taylor graph indexed by the local eigenvalue pair
// (r, s) = (n - m, -m).
struct TaylorParams {
  long long k = 0, c2 = 0, a1 = 0, lambda = 0, mu = 0;
  long long r = 0, s = 0, m = 0, n = 0;
};

struct TaylorTrichotomy {
  enum class Branch { Oa, Steiner, Neither };
  Branch branch = Branch::Neither;
  TaylorParams params;
  Verdict verdict;
};

// For m >= 2, n > m: local parameters
// ((2n-2m+1)(2m-1), 2m(n-m), (n-m)(m+1)-m, m(n-m)); n = 2m-1 is the
// OA-parameter branch (c_2 = 2m(m-1)), n = 2m the Steiner branch
// (c_2 = 2(m+1)(m-1)), anything else neither.
TaylorTrichotomy taylor_trichotomy(long long m, long long n);

// mu <= m^3 (2m-3) for a strongly regular graph with integral smallest
// eigenvalue -m, m >= 2; equality pins n = m(m-1)(2m-1).
Int neumaier_mu_bound(long long m);

// f(m, mu) = m(m-1)(mu+1)/2 + m - 1. For primitive integral parameters:
// mu = m(m-1) and n > f forces an OA block graph, mu = m^2 and n > f
// forces a Steiner block graph, any other mu with n > f is excluded.
Verdict claw_bound_classify(const SrgParams& p);

// g(m) = ((m^3(2m-3)+1)(m^2(m-1)+2))/2 - m - 1 with m = b+1, and
// phi(b) = (((1+b)^3(2b-1)+1)(b(1+b)^2+2) - 2b - 4)^2 / 4 + 1.
// phi(b) = 1 + g(b+1)^2. Requires b >= 2.
struct ValencyBound {
  Int g;
  Int phi;
};
ValencyBound valency_bound(long long b);

// Arithmetic core of the general screen, usable on synthetic parameter
// sets: k valency, c2, b = -1 - s_local, mu_local the forced local mu.
// The caller guarantees the tight hypothesis.
Verdict screen_tight_gate(const Int& k, const Int& c2, const Int& b, const Rat& mu_local);

// Runs the tightness test on (arr, spec); inapplicable unless tight with
// integral b >= 2. Then matches the forced local parameters against the
// OA family (mu = m(m-1)) and the Steiner family (mu = m^2) with
// m = 1 + b, applies the c_2 exclusions for k beyond the small cases, and
// otherwise the valency bound k <= phi(b). An exclusion here rules out a
// tight graph whose local graphs genuinely lie in the matched family.
Verdict screen_tight_general(const IntersectionArray& arr, const Spectrum& spec);

// Batch line: "classical D b alpha beta" | "srg v k lambda mu" |
// "array {b...;c...} n=<count>". Returns the verdict, or throws
// std::invalid_argument on a malformed line.
Verdict screen_line(const std::string& line);

}  // namespace tightgraphs
