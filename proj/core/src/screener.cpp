#include "tightgraphs/screener.hpp"

#include <sstream>
#include <stdexcept>

namespace tightgraphs {

Int gaussian_bracket(int i, long long b) {
  if (i < 0) throw std::invalid_argument("gaussian_bracket: i >= 0 required");
  if (b == 0) throw std::invalid_argument("gaussian_bracket: b must be nonzero");
  Int sum = 0, pw = 1;
  for (int j = 0; j < i; ++j) {
    sum += pw;
    pw *= b;
  }
  return sum;
}

IntersectionArray classical_to_array(const ClassicalParams& p) {
  if (p.diameter < 1) throw std::invalid_argument("classical parameters need diameter >= 1");
  if (p.b == 0) throw std::invalid_argument("classical parameters need b != 0");
  const int d = p.diameter;
  Rat bd = Rat(gaussian_bracket(d, p.b));
  IntersectionArray arr;
  for (int i = 0; i < d; ++i) {
    Rat gi = Rat(gaussian_bracket(i, p.b));
    Rat bi = (bd - gi) * (p.beta - p.alpha * gi);
    if (!rat_is_integer(bi) || bi <= 0)
      throw std::domain_error("classical b_" + std::to_string(i) + " = " + bi.str() +
                              " is not a positive integer");
    arr.b.push_back(rat_num(bi));
  }
  for (int i = 1; i <= d; ++i) {
    Rat gi = Rat(gaussian_bracket(i, p.b));
    Rat ci = gi * (Rat(1) + p.alpha * Rat(gaussian_bracket(i - 1, p.b)));
    if (!rat_is_integer(ci) || ci <= 0)
      throw std::domain_error("classical c_" + std::to_string(i) + " = " + ci.str() +
                              " is not a positive integer");
    arr.c.push_back(rat_num(ci));
  }
  arr.validate();
  return arr;
}

bool is_tight_classical(const ClassicalParams& p) {
  if (p.diameter < 2 || p.b <= 0 || p.alpha <= 0) return false;
  return p.beta == Rat(1) + p.alpha * Rat(gaussian_bracket(p.diameter - 1, p.b));
}

SrgParams local_params_classical(const ClassicalParams& p) {
  if (!is_tight_classical(p))
    throw std::domain_error("local parameters are forced only for tight classical parameters");
  const int d = p.diameter;
  Rat b1 = Rat(p.b) + 1;
  Rat gd1 = Rat(gaussian_bracket(d - 1, p.b));
  Rat gd2 = Rat(gaussian_bracket(d - 2, p.b));
  Rat v = Rat(gaussian_bracket(d, p.b)) * p.beta;  // b_0
  Rat a1 = p.alpha * b1 * gd1;
  Rat lambda = (p.alpha - 1) * b1 + p.alpha * Rat(p.b) * gd2;
  Rat mu = p.alpha * b1;
  for (const Rat* q : {&v, &a1, &lambda, &mu})
    if (!rat_is_integer(*q))
      throw std::domain_error("forced local parameter " + q->str() + " is not integral");
  return srg_params_from_tuple(to_ll_checked(rat_num(v), "local v"),
                               to_ll_checked(rat_num(a1), "local valency"),
                               to_ll_checked(rat_num(lambda), "local lambda"),
                               to_ll_checked(rat_num(mu), "local mu"));
}

std::string Verdict::status_string() const {
  switch (status) {
    case Status::Excluded: return "EXCLUDED";
    case Status::Consistent: return "CONSISTENT";
    case Status::Inapplicable: return "INAPPLICABLE";
    case Status::Infeasible: return "INFEASIBLE";
    case Status::MustBeOa: return "MUST-BE-OA";
    case Status::MustBeSteiner: return "MUST-BE-STEINER";
  }
  return "?";
}

std::string Verdict::line() const {
  std::string s = status_string();
  if (!rule.empty()) s += " rule=" + rule;
  for (const auto& [k, v] : computed) s += " " + k + "=" + v;
  return s;
}

Verdict screen_tight_classical(const ClassicalParams& p) {
  if (p.diameter < 3)
    throw std::invalid_argument("screen_tight_classical: diameter >= 3 required");
  Verdict v;
  if (!is_tight_classical(p)) {
    v.status = Verdict::Status::Inapplicable;
    v.add("tight", "no");
    return v;
  }
  if (p.b < 2) {
    v.status = Verdict::Status::Inapplicable;
    v.add("b", std::to_string(p.b));
    return v;
  }
  Int m = Int(p.b) + 1;
  if (p.alpha == Rat(p.b)) {
    v.status = Verdict::Status::Excluded;
    v.rule = "Thm6.2(i)";
    v.add("c2", ((Int(1) + p.b) * (Int(1) + p.b)).str());
    v.add("m", m.str());
    return v;
  }
  if (p.alpha == Rat(p.b) + 1) {
    v.status = Verdict::Status::Excluded;
    v.rule = "Thm6.2(ii)";
    v.add("c2", ((Int(1) + p.b) * (Int(2) + p.b)).str());
    v.add("m", m.str());
    return v;
  }
  v.status = Verdict::Status::Consistent;
  v.add("b", std::to_string(p.b));
  v.add("alpha", p.alpha.str());
  return v;
}

TaylorTrichotomy taylor_trichotomy(long long m, long long n) {
  if (m < 2 || n <= m)
    throw std::invalid_argument("taylor_trichotomy: need m >= 2 and n > m");
  TaylorTrichotomy out;
  TaylorParams& t = out.params;
  t.m = m;
  t.n = n;
  t.r = n - m;
  t.s = -m;
  t.k = (2 * n - 2 * m + 1) * (2 * m - 1);
  t.a1 = 2 * m * (n - m);
  t.lambda = (n - m) * (m + 1) - m;
  t.mu = m * (n - m);
  t.c2 = t.k - t.a1 - 1;

  // cross-checks; violations mean the parameter set cannot carry the local
  // structure at all
  bool ok = t.k == -(2 * t.r + 1) * (2 * t.s + 1) && t.a1 % 2 == 0 && t.mu == t.a1 / 2 &&
            2 * t.lambda == 3 * t.a1 - t.k - 1;
  if (!ok) {
    out.verdict.status = Verdict::Status::Infeasible;
    out.verdict.add("k", std::to_string(t.k));
    out.verdict.add("c2", std::to_string(t.c2));
    return out;
  }
  out.verdict.status = Verdict::Status::Consistent;
  if (n == 2 * m - 1) {
    out.branch = TaylorTrichotomy::Branch::Oa;
    out.verdict.rule = "Prop5.6(OA)";
  } else if (n == 2 * m) {
    out.branch = TaylorTrichotomy::Branch::Steiner;
    out.verdict.rule = "Prop5.6(Steiner)";
  } else {
    out.branch = TaylorTrichotomy::Branch::Neither;
    out.verdict.rule = "Prop5.6(neither)";
  }
  out.verdict.add("k", std::to_string(t.k));
  out.verdict.add("c2", std::to_string(t.c2));
  out.verdict.add("r", std::to_string(t.r));
  out.verdict.add("s", std::to_string(t.s));
  return out;
}

Int neumaier_mu_bound(long long m) {
  if (m < 2) throw std::invalid_argument("neumaier_mu_bound: m >= 2 required");
  return Int(m) * m * m * (2 * m - 3);
}

Verdict claw_bound_classify(const SrgParams& p) {
  Verdict v;
  if (!p.integral) {
    v.status = Verdict::Status::Inapplicable;
    v.add("reason", "non-integral-eigenvalues");
    return v;
  }
  if (p.mu <= 0 || p.mu >= p.k) {
    v.status = Verdict::Status::Inapplicable;
    v.add("reason", "imprimitive");
    return v;
  }
  Int m = p.m();
  if (m < 2) {
    // smallest eigenvalue -1 means a union of cliques; nothing to classify
    v.status = Verdict::Status::Inapplicable;
    v.add("reason", "m<2");
    return v;
  }
  Int n = p.n_gap();
  Int f = m * (m - 1) * (Int(p.mu) + 1) / 2 + m - 1;
  bool beyond = n > f;
  if (Int(p.mu) == m * (m - 1) && beyond) {
    v.status = Verdict::Status::MustBeOa;
    v.rule = "ClawBound(i)";
  } else if (Int(p.mu) == m * m && beyond) {
    v.status = Verdict::Status::MustBeSteiner;
    v.rule = "ClawBound(ii)";
  } else if (beyond) {
    v.status = Verdict::Status::Excluded;
    v.rule = "ClawBound(iii)";
  } else {
    v.status = Verdict::Status::Consistent;
  }
  v.add("f", f.str());
  v.add("n", n.str());
  v.add("mu", std::to_string(p.mu));
  return v;
}

ValencyBound valency_bound(long long b) {
  if (b < 2) throw std::invalid_argument("valency_bound: b >= 2 required");
  Int m = Int(b) + 1;
  ValencyBound out;
  out.g = (m * m * m * (2 * m - 3) + 1) * (m * m * (m - 1) + 2) / 2 - m - 1;
  Int b1 = Int(b) + 1;
  Int inner = (b1 * b1 * b1 * (2 * b - 1) + 1) * (Int(b) * b1 * b1 + 2) - 2 * b - 4;
  out.phi = inner * inner / 4 + 1;
  return out;
}

Verdict screen_tight_gate(const Int& k, const Int& c2, const Int& b, const Rat& mu_local) {
  Verdict v;
  if (b < 2) {
    v.status = Verdict::Status::Inapplicable;
    v.add("b", b.str());
    return v;
  }
  Int m = b + 1;
  if (mu_local == Rat(m * (m - 1))) {
    if (k > m * m && c2 == m * m) {
      v.status = Verdict::Status::Excluded;
      v.rule = "Thm1.2(i)";
      v.add("family", "oa");
      v.add("c2", c2.str());
      v.add("m", m.str());
      return v;
    }
    v.status = Verdict::Status::Consistent;
    v.add("family", "oa");
  } else if (mu_local == Rat(m * m)) {
    if (k > m * (m + 1) && c2 == m * (m + 1)) {
      v.status = Verdict::Status::Excluded;
      v.rule = "Thm1.2(ii)";
      v.add("family", "steiner");
      v.add("c2", c2.str());
      v.add("m", m.str());
      return v;
    }
    v.status = Verdict::Status::Consistent;
    v.add("family", "steiner");
  } else {
    ValencyBound vb = valency_bound(to_ll_checked(b, "b"));
    if (k > vb.phi) {
      v.status = Verdict::Status::Excluded;
      v.rule = "Thm1.3";
      v.add("family", "none");
      v.add("k", k.str());
      v.add("phi", vb.phi.str());
      return v;
    }
    v.status = Verdict::Status::Consistent;
    v.add("family", "none");
    v.add("phi", vb.phi.str());
  }
  v.add("b", b.str());
  v.add("k", k.str());
  return v;
}

Verdict screen_tight_general(const IntersectionArray& arr, const Spectrum& spec) {
  TightReport rep = tightness_test(arr, spec, arr.all_a_zero());
  Verdict v;
  if (!rep.tight) {
    v.status = Verdict::Status::Inapplicable;
    v.add("tight", "no");
    return v;
  }
  if (!rep.exact || !rat_is_integer(rep.b_parameter)) {
    v.status = Verdict::Status::Inapplicable;
    v.add("b", rep.exact ? rep.b_parameter.str() : "non-integral");
    return v;
  }
  Int b = rat_num(rep.b_parameter);
  if (b < 2) {
    v.status = Verdict::Status::Inapplicable;
    v.add("b", b.str());
    return v;
  }
  const Int a1 = arr.ai(1);
  // forced local mu = a_1 + r s
  Rat mu_local = Rat(a1) + rep.local_r * rep.local_s;
  return screen_tight_gate(arr.valency(), arr.ci(2), b, mu_local);
}

Verdict screen_line(const std::string& line) {
  std::istringstream ss(line);
  std::string kind;
  if (!(ss >> kind)) throw std::invalid_argument("empty line");
  auto need_end = [&] {
    std::string extra;
    if (ss >> extra) throw std::invalid_argument("trailing token '" + extra + "'");
  };
  if (kind == "classical") {
    std::string d, b, alpha, beta;
    if (!(ss >> d >> b >> alpha >> beta))
      throw std::invalid_argument("expected: classical D b alpha beta");
    need_end();
    ClassicalParams p;
    try {
      p.diameter = std::stoi(d);
      p.b = std::stoll(b);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer in classical line");
    }
    p.alpha = parse_rational(alpha);
    p.beta = parse_rational(beta);
    return screen_tight_classical(p);
  }
  if (kind == "srg") {
    long long v, k, lambda, mu;
    if (!(ss >> v >> k >> lambda >> mu))
      throw std::invalid_argument("expected: srg v k lambda mu");
    need_end();
    return claw_bound_classify(srg_params_from_tuple(v, k, lambda, mu));
  }
  if (kind == "array") {
    std::string arr_text, n_text;
    if (!(ss >> arr_text >> n_text))
      throw std::invalid_argument("expected: array {b...;c...} n=<count>");
    need_end();
    if (n_text.rfind("n=", 0) != 0) throw std::invalid_argument("expected n=<count>");
    IntersectionArray arr = IntersectionArray::parse(arr_text);
    Int n(n_text.substr(2));
    if (arr.vertex_count() != n)
      throw std::invalid_argument("array " + arr.to_string() + " has " +
                                  arr.vertex_count().str() + " vertices, line says " + n.str());
    Spectrum spec = spectrum_from_array(arr);
    Verdict v = arr.diameter() >= 3
                    ? screen_tight_general(arr, spec)
                    : [&] {
                        Verdict w;
                        w.status = Verdict::Status::Inapplicable;
                        w.add("reason", "diameter<3");
                        return w;
                      }();
    return v;
  }
  throw std::invalid_argument("unknown input kind '" + kind + "'");
}

}  // namespace tightgraphs
