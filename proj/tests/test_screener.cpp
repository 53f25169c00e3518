#include <stdexcept>

#include "doctest.h"
#include "tightgraphs/drg.hpp"
#include "tightgraphs/numeric.hpp"
#include "tightgraphs/screener.hpp"
#include "tightgraphs/srg.hpp"

using namespace tightgraphs;

TEST_CASE("gaussian brackets") {
  CHECK(gaussian_bracket(0, 2) == 0);
  CHECK(gaussian_bracket(1, 2) == 1);
  CHECK(gaussian_bracket(3, 2) == 7);
  CHECK(gaussian_bracket(4, 3) == 40);
  CHECK(gaussian_bracket(2, -2) == -1);
  CHECK(gaussian_bracket(2, 1) == 2);  // b = 1 degenerates to i
  CHECK_THROWS_AS(gaussian_bracket(2, 0), std::invalid_argument);
}

TEST_CASE("classical parameters expand to the right arrays") {
  ClassicalParams j63{3, 1, Rat(1), Rat(3)};
  CHECK(classical_to_array(j63).to_string() == "{9,4,1;1,4,9}");

  ClassicalParams big{4, 2, Rat(2), Rat(15)};
  CHECK(classical_to_array(big).to_string() == "{225,182,108,8;1,9,49,225}");

  ClassicalParams alpha0{3, 2, Rat(0), Rat(1)};
  auto arr = classical_to_array(alpha0);
  CHECK(arr.valency() == 7);
  CHECK(arr.c == std::vector<Int>{1, 3, 7});
}

TEST_CASE("classical expansion rejects non-integral or non-positive entries") {
  CHECK_THROWS_AS(classical_to_array({3, 2, Rat(1, 2), Rat(3)}), std::domain_error);
  CHECK_THROWS_AS(classical_to_array({3, 2, Rat(5), Rat(1)}), std::domain_error);
  CHECK_THROWS_AS(classical_to_array({0, 2, Rat(1), Rat(3)}), std::invalid_argument);
  CHECK_THROWS_AS(classical_to_array({3, 0, Rat(1), Rat(3)}), std::invalid_argument);
}

TEST_CASE("tight classical detection") {
  CHECK(is_tight_classical({3, 1, Rat(1), Rat(3)}));
  CHECK(is_tight_classical({4, 2, Rat(2), Rat(15)}));
  CHECK(is_tight_classical({4, 2, Rat(3), Rat(22)}));
  CHECK_FALSE(is_tight_classical({4, 2, Rat(2), Rat(14)}));
  CHECK_FALSE(is_tight_classical({3, 2, Rat(0), Rat(1)}));  // needs alpha > 0
}

TEST_CASE("forced local parameters of tight classical sets") {
  auto p = local_params_classical({4, 2, Rat(2), Rat(15)});
  CHECK(p.v == 225);
  CHECK(p.k == 42);
  CHECK(p.lambda == 15);
  CHECK(p.mu == 6);
  REQUIRE(p.integral);
  CHECK(p.r_int == 12);
  CHECK(p.s_int == -3);

  // s = -1-b across a sweep, and the SRG relations hold by construction
  for (int d = 3; d <= 6; ++d)
    for (long long b = 2; b <= 4; ++b)
      for (long long alpha = 1; alpha <= 6; ++alpha) {
        ClassicalParams cp{d, b, Rat(alpha),
                           Rat(1) + Rat(alpha) * Rat(gaussian_bracket(d - 1, b))};
        auto lp = local_params_classical(cp);
        REQUIRE(lp.integral);
        CHECK(lp.s_int == -1 - b);
        CHECK(lp.mu == lp.k + lp.r_int * lp.s_int);
        CHECK(lp.lambda == lp.k + lp.r_int + lp.s_int + lp.r_int * lp.s_int);
        CHECK(lp.v * (lp.k + lp.r_int * lp.s_int) == (lp.k - lp.r_int) * (lp.k - lp.s_int));
      }

  CHECK_THROWS_AS(local_params_classical({4, 2, Rat(2), Rat(14)}), std::domain_error);
}

TEST_CASE("classical screen fires on the two excluded families") {
  auto v = screen_tight_classical({4, 2, Rat(2), Rat(15)});
  CHECK(v.status == Verdict::Status::Excluded);
  CHECK(v.rule == "Thm6.2(i)");
  CHECK(v.line() == "EXCLUDED rule=Thm6.2(i) c2=9 m=3");

  v = screen_tight_classical({4, 2, Rat(3), Rat(22)});
  CHECK(v.status == Verdict::Status::Excluded);
  CHECK(v.rule == "Thm6.2(ii)");
  CHECK(v.line() == "EXCLUDED rule=Thm6.2(ii) c2=12 m=3");

  v = screen_tight_classical({3, 1, Rat(1), Rat(3)});
  CHECK(v.status == Verdict::Status::Inapplicable);
  CHECK(v.line() == "INAPPLICABLE b=1");

  v = screen_tight_classical({4, 2, Rat(2), Rat(14)});
  CHECK(v.status == Verdict::Status::Inapplicable);
}

TEST_CASE("the classical verdict fires exactly for alpha in {b, b+1}") {
  for (int d = 3; d <= 8; ++d)
    for (long long b = 2; b <= 5; ++b)
      for (long long alpha = 1; alpha <= 10; ++alpha) {
        ClassicalParams p{d, b, Rat(alpha),
                          Rat(1) + Rat(alpha) * Rat(gaussian_bracket(d - 1, b))};
        REQUIRE(is_tight_classical(p));
        auto v = screen_tight_classical(p);
        bool should_fire = (alpha == b) || (alpha == b + 1);
        CHECK_MESSAGE((v.status == Verdict::Status::Excluded) == should_fire,
                      "D=", d, " b=", b, " alpha=", alpha, " -> ", v.line());
        if (v.status == Verdict::Status::Excluded) {
          CHECK(v.rule == (alpha == b ? "Thm6.2(i)" : "Thm6.2(ii)"));
          // the excluded c_2 value matches the expanded array
          auto arr = classical_to_array(p);
          Int expect = alpha == b ? Int(1 + b) * (1 + b) : Int(1 + b) * (2 + b);
          CHECK(arr.ci(2) == expect);
        }
      }
}

TEST_CASE("Taylor trichotomy hits the three branches") {
  auto t = taylor_trichotomy(2, 3);
  CHECK(t.branch == TaylorTrichotomy::Branch::Oa);
  CHECK(t.verdict.rule == "Prop5.6(OA)");
  CHECK(t.params.c2 == 4);  // 2m(m-1)

  t = taylor_trichotomy(2, 4);
  CHECK(t.branch == TaylorTrichotomy::Branch::Steiner);
  CHECK(t.verdict.rule == "Prop5.6(Steiner)");
  CHECK(t.params.c2 == 6);  // 2(m+1)(m-1)

  t = taylor_trichotomy(3, 4);
  CHECK(t.branch == TaylorTrichotomy::Branch::Neither);
  CHECK(t.verdict.rule == "Prop5.6(neither)");
  CHECK(t.params.k == 15);
  CHECK(t.params.r == 1);
  CHECK(t.params.s == -3);
}

TEST_CASE("Taylor branch membership is exclusive and c2 = k - a1 - 1") {
  for (long long m = 2; m <= 5; ++m)
    for (long long n = m + 1; n <= 12; ++n) {
      auto t = taylor_trichotomy(m, n);
      int fired = (t.branch == TaylorTrichotomy::Branch::Oa) +
                  (t.branch == TaylorTrichotomy::Branch::Steiner) +
                  (t.branch == TaylorTrichotomy::Branch::Neither);
      CHECK(fired == 1);
      CHECK((n == 2 * m - 1) == (t.branch == TaylorTrichotomy::Branch::Oa));
      CHECK((n == 2 * m) == (t.branch == TaylorTrichotomy::Branch::Steiner));
      CHECK(t.params.c2 == t.params.k - t.params.a1 - 1);
      CHECK(t.params.k == -(2 * t.params.r + 1) * (2 * t.params.s + 1));
    }
}

TEST_CASE("Neumaier mu bound") {
  CHECK(neumaier_mu_bound(2) == 8);
  CHECK(neumaier_mu_bound(3) == 81);
  CHECK(neumaier_mu_bound(4) == 320);
  CHECK_THROWS_AS(neumaier_mu_bound(1), std::invalid_argument);
}

TEST_CASE("claw bound classification") {
  auto v = claw_bound_classify(srg_params_from_tuple(49, 12, 5, 2));
  CHECK(v.status == Verdict::Status::MustBeOa);
  CHECK(v.line() == "MUST-BE-OA rule=ClawBound(i) f=4 n=7 mu=2");

  v = claw_bound_classify(srg_params_from_tuple(9, 4, 1, 2));
  CHECK(v.status == Verdict::Status::Consistent);

  v = claw_bound_classify(srg_params_from_tuple(117, 36, 15, 9));
  CHECK(v.status == Verdict::Status::Consistent);
  CHECK(v.line() == "CONSISTENT f=32 n=12 mu=9");

  // mu = m^2 beyond f forces a Steiner block graph: T(9) parameters
  v = claw_bound_classify(srg_params_from_tuple(36, 14, 7, 4));
  CHECK(v.status == Verdict::Status::MustBeSteiner);
  CHECK(v.line() == "MUST-BE-STEINER rule=ClawBound(ii) f=6 n=7 mu=4");

  // mu outside both families beyond f is excluded outright
  v = claw_bound_classify(srg_params_from_tuple(40, 13, 6, 3));
  CHECK(v.status == Verdict::Status::Excluded);
  CHECK(v.rule == "ClawBound(iii)");

  // gates: non-integral eigenvalues, imprimitive, m < 2
  CHECK(claw_bound_classify(srg_params_from_tuple(5, 2, 0, 1)).status ==
        Verdict::Status::Inapplicable);
  CHECK(claw_bound_classify(srg_params_from_tuple(9, 6, 3, 6)).status ==
        Verdict::Status::Inapplicable);
  CHECK(claw_bound_classify(srg_params_from_tuple(10, 9, 8, 9)).status ==
        Verdict::Status::Inapplicable);
}

TEST_CASE("claw bound never excludes a built OA block graph") {
  for (int n : {3, 5, 7})
    for (int m = 2; m <= std::min(n, 4); ++m) {
      long long k = static_cast<long long>(m) * (n - 1);
      long long lambda = static_cast<long long>(m - 1) * (m - 2) + n - 2;
      long long mu = static_cast<long long>(m) * (m - 1);
      auto v = claw_bound_classify(
          srg_params_from_tuple(static_cast<long long>(n) * n, k, lambda, mu));
      CHECK((v.status == Verdict::Status::MustBeOa || v.status == Verdict::Status::Consistent ||
             v.status == Verdict::Status::Inapplicable));
      CHECK(v.status != Verdict::Status::Excluded);
    }
}

TEST_CASE("valency bound values and the phi identity") {
  auto vb = valency_bound(2);
  CHECK(vb.g == 816);
  CHECK(vb.phi == 665857);
  vb = valency_bound(3);
  CHECK(vb.g == 8020);
  CHECK(vb.phi == 64320401);
  for (long long b = 2; b <= 10; ++b) {
    auto x = valency_bound(b);
    CHECK(x.phi == 1 + x.g * x.g);
  }
  CHECK_THROWS_AS(valency_bound(1), std::invalid_argument);
}

TEST_CASE("general tight gate: family matching and the c2 exclusions") {
  // locally-OA match with the forbidden c2
  auto v = screen_tight_gate(Int(100), Int(9), Int(2), Rat(6));
  CHECK(v.status == Verdict::Status::Excluded);
  CHECK(v.rule == "Thm1.2(i)");

  // same mu but c2 != m^2 stays consistent
  v = screen_tight_gate(Int(100), Int(8), Int(2), Rat(6));
  CHECK(v.status == Verdict::Status::Consistent);

  // small k escapes the exclusion
  v = screen_tight_gate(Int(9), Int(9), Int(2), Rat(6));
  CHECK(v.status == Verdict::Status::Consistent);

  // locally-Steiner match
  v = screen_tight_gate(Int(117), Int(12), Int(2), Rat(9));
  CHECK(v.status == Verdict::Status::Excluded);
  CHECK(v.rule == "Thm1.2(ii)");

  // neither family: valency bound fires just past phi(2)
  v = screen_tight_gate(Int(665858), Int(10), Int(2), Rat(7));
  CHECK(v.status == Verdict::Status::Excluded);
  CHECK(v.rule == "Thm1.3");
  v = screen_tight_gate(Int(665857), Int(10), Int(2), Rat(7));
  CHECK(v.status == Verdict::Status::Consistent);

  // b < 2 is out of scope
  v = screen_tight_gate(Int(9), Int(4), Int(1), Rat(2));
  CHECK(v.status == Verdict::Status::Inapplicable);
}

TEST_CASE("screen_tight_general on real arrays") {
  // J(6,3): tight but b = 1
  auto arr = IntersectionArray::parse("{9,4,1;1,4,9}");
  auto v = screen_tight_general(arr, spectrum_from_array(arr));
  CHECK(v.status == Verdict::Status::Inapplicable);
  CHECK(v.line() == "INAPPLICABLE b=1");

  // the 1134-vertex set matches the Steiner family parameters with the
  // forbidden c2, so the locally-Steiner hypothesis is excluded
  arr = IntersectionArray::parse("{117,80,24,1;1,12,80,117}");
  v = screen_tight_general(arr, spectrum_from_array(arr));
  CHECK(v.status == Verdict::Status::Excluded);
  CHECK(v.rule == "Thm1.2(ii)");

  // hypercube: bipartite, never tight
  arr = IntersectionArray::parse("{4,3,2,1;1,2,3,4}");
  v = screen_tight_general(arr, spectrum_from_array(arr));
  CHECK(v.status == Verdict::Status::Inapplicable);
}

TEST_CASE("batch lines parse and dispatch") {
  CHECK(screen_line("classical 4 2 2 15").line() == "EXCLUDED rule=Thm6.2(i) c2=9 m=3");
  CHECK(screen_line("srg 117 36 15 9").line() == "CONSISTENT f=32 n=12 mu=9");
  CHECK(screen_line("classical 3 1 1 3").line() == "INAPPLICABLE b=1");
  CHECK(screen_line("array {9,4,1;1,4,9} n=20").status == Verdict::Status::Inapplicable);
  CHECK(screen_line("classical 4 2 1/2 15/2").status == Verdict::Status::Inapplicable);

  CHECK_THROWS_AS(screen_line(""), std::invalid_argument);
  CHECK_THROWS_AS(screen_line("bogus 1 2 3"), std::invalid_argument);
  CHECK_THROWS_AS(screen_line("classical 4 2 2"), std::invalid_argument);
  CHECK_THROWS_AS(screen_line("srg 10 3 0"), std::invalid_argument);
  CHECK_THROWS_AS(screen_line("array {9,4,1;1,4,9} n=21"), std::invalid_argument);
  CHECK_THROWS_AS(screen_line("classical 4 2 2 15 9"), std::invalid_argument);
}
