#include "strat/arcs.hpp"

#include <array>
#include <sstream>

namespace strat {

namespace {

// Escalation signals, caught by the ladder in `escalate`.
struct NeedsPrecision {};
struct NeedsDepth {};
struct IncompatibleRadicals {};

mpq_class qpow(const mpq_class& v, std::int64_t k) {
  mpq_class out = 1;
  for (std::int64_t i = 0; i < k; ++i) out *= v;
  return out;
}

PuiseuxSeries mono(const Coeff& c, const Rational& e) { return PuiseuxSeries::monomial(c, e); }
PuiseuxSeries mono(const mpq_class& c, const Rational& e) { return PuiseuxSeries::monomial(Coeff(c), e); }

PuiseuxSeries spow(const PuiseuxSeries& s, std::int64_t k) { return pow(s, static_cast<unsigned>(k)); }

// |value| ~ lead u^order (Known), O(u^order) (Bound) or identically 0.
// The lead is optional: order-only passes skip all interval work.
struct Asym {
  enum Kind { Zero, Known, Bound } kind = Zero;
  Rational order;
  std::optional<Coeff> lead;

  static Asym zero() { return {}; }
  static Asym known(const Rational& o, const std::optional<Coeff>& l) {
    return {Known, o, l ? std::optional<Coeff>(l->abs()) : std::nullopt};
  }
  static Asym bound(const Rational& o) { return {Bound, o, std::nullopt}; }
};

Asym from_cert(const OrderCertificate& c) {
  switch (c.status) {
    case OrderCertificate::Status::Infinite: return Asym::zero();
    case OrderCertificate::Status::Finite: return Asym::known(*c.order, *c.leading);
    case OrderCertificate::Status::Indeterminate: break;
  }
  if (c.issue == OrderCertificate::Issue::Straddle) throw NeedsPrecision{};
  return Asym::bound(*c.order);
}

Asym asym(const PuiseuxSeries& s) { return from_cert(order_of(s)); }
Asym asym(const RadicalSeries& s) { return from_cert(s.order()); }

// |c1 u^e1 + c2 u^e2| with exact rational coefficients.
Asym binomial(const mpq_class& c1, const Rational& e1, const mpq_class& c2, const Rational& e2, bool leads) {
  auto mk = [leads](const Rational& e, const mpq_class& c) {
    return Asym::known(e, leads ? std::optional<Coeff>(Coeff(c)) : std::nullopt);
  };
  if (c1 == 0 && c2 == 0) return Asym::zero();
  if (c1 == 0) return mk(e2, c2);
  if (c2 == 0) return mk(e1, c1);
  if (e1 < e2) return mk(e1, c1);
  if (e2 < e1) return mk(e2, c2);
  const mpq_class sum = c1 + c2;
  return sum == 0 ? Asym::zero() : mk(e1, sum);
}

std::optional<Coeff> lead_mul(const std::optional<Coeff>& l, const std::optional<Coeff>& r) {
  if (!l || !r) return std::nullopt;
  return *l * *r;
}

Asym mul(const Asym& l, const Asym& r) {
  if (l.kind == Asym::Zero || r.kind == Asym::Zero) return Asym::zero();
  if (l.kind == Asym::Bound || r.kind == Asym::Bound) return Asym::bound(l.order + r.order);
  return Asym::known(l.order + r.order, lead_mul(l.lead, r.lead));
}

Asym div(const Asym& l, const Asym& r) {
  if (r.kind == Asym::Zero) throw DegenerateDenominator("denominator vanishes identically along the arc");
  if (r.kind == Asym::Bound) throw NeedsDepth{};
  if (l.kind == Asym::Zero) return Asym::zero();
  if (l.kind == Asym::Bound) return Asym::bound(l.order - r.order);
  std::optional<Coeff> lead;
  if (l.lead && r.lead) lead = *l.lead / *r.lead;
  return Asym::known(l.order - r.order, lead);
}

Asym rpow(const Asym& v, const Rational& r) {
  if (v.kind == Asym::Zero) {
    if (r.sign() > 0) return v;
    throw DegenerateDenominator("zero raised to a non-positive power");
  }
  if (v.kind == Asym::Bound) {
    if (r.sign() > 0) return Asym::bound(v.order * r);
    throw NeedsDepth{};
  }
  if (r == Rational(0)) return Asym::known(Rational(0), Coeff(1L));
  return Asym::known(v.order * r, v.lead ? std::optional<Coeff>(positive_rpow(*v.lead, r)) : std::nullopt);
}

// sqrt of a sum of squares (norm) or the maximum (sup) of magnitudes.
Asym combine(const std::vector<Asym>& parts, bool is_norm) {
  std::optional<Rational> known, bound;
  for (const auto& p : parts) {
    if (p.kind == Asym::Known && (!known || p.order < *known)) known = p.order;
    if (p.kind == Asym::Bound && (!bound || p.order < *bound)) bound = p.order;
  }
  if (!known && !bound) return Asym::zero();
  if (!known || (bound && *bound <= *known)) return Asym::bound(bound ? min(*bound, known.value_or(*bound)) : *known);
  std::optional<Coeff> acc;
  bool have = true;
  for (const auto& p : parts) {
    if (p.kind != Asym::Known || p.order != *known) continue;
    if (!p.lead) {
      have = false;
      break;
    }
    if (is_norm) {
      acc = acc ? *acc + p.lead->square() : p.lead->square();
    } else {
      acc = acc ? abs_max(*acc, *p.lead) : *p.lead;
    }
  }
  if (!have) return Asym::known(*known, std::nullopt);
  return Asym::known(*known, is_norm ? positive_rpow(*acc, Rational(1, 2)) : *acc);
}


LimitBehavior behavior_of(const Asym& q) {
  LimitBehavior out;
  switch (q.kind) {
    case Asym::Zero:
      out.cls = LimitClass::TendsToZero;
      out.note = "identically zero";
      break;
    case Asym::Known:
      out.order = q.order;
      if (q.lead) out.leading = q.lead->enclosure();
      out.cls = limit_class(q.order, false);
      break;
    case Asym::Bound:
      out.order = q.order;
      if (q.order.sign() > 0) {
        out.cls = LimitClass::TendsToZero;
        out.note = "bounded by u^" + q.order.to_string();
      } else {
        out.cls = LimitClass::Indeterminate;
        out.note = "truncation exhausted";
      }
      break;
  }
  return out;
}

// Depth doubling outside, precision doubling inside; every result must be
// decided for a round to count.
template <std::size_t N, class F>
std::array<LimitBehavior, N> escalate(F&& compute, const LimitOptions& opt) {
  std::array<LimitBehavior, N> last{};
  Rational depth = opt.depth;
  auto fail_all = [&](const std::string& note) {
    for (auto& l : last) {
      l = LimitBehavior{};
      l.note = note;
    }
  };
  for (unsigned round = 0; round <= opt.depth_doublings; ++round, depth = depth * Rational(2)) {
    bool deepen = false;
    for (unsigned bits = kDefaultPrecision; bits <= opt.precision_cap; bits *= 2) {
      PrecisionScope scope(bits);
      try {
        const std::array<Asym, N> vals = compute(depth);
        bool decided = true;
        for (std::size_t k = 0; k < N; ++k) {
          last[k] = behavior_of(vals[k]);
          decided = decided && last[k].cls != LimitClass::Indeterminate;
        }
        if (decided) {
          for (auto& l : last) {
            l.note += (l.note.empty() ? "" : "; ") + std::string("depth ") + depth.to_string() + ", " +
                      std::to_string(bits) + " bits";
          }
          return last;
        }
        deepen = true;
      } catch (const NeedsPrecision&) {
        fail_all("leading coefficient straddles zero at " + std::to_string(opt.precision_cap) + " bits");
        continue;
      } catch (const NeedsDepth&) {
        fail_all("truncation exhausted at depth " + depth.to_string());
        deepen = true;
      } catch (const IncompatibleRadicals&) {
        fail_all("the two sheets need different radicals");
        break;
      } catch (const IndeterminateLeading&) {
        fail_all("indeterminate leading term");
        continue;
      }
      break;
    }
    if (!deepen) break;
  }
  return last;
}

// Coefficient data shared by the single-arc quantities.
struct ArcData {
  mpq_class xi;  // signed x coefficient
  mpq_class zb;  // coefficient of z^b
  // rhs = r1 u^e1 + r2 u^e2 = z^b x^c + x^d
  mpq_class r1, r2;
  Rational e1, e2;

  PuiseuxSeries rhs() const { return mono(r1, e1) + mono(r2, e2); }
  Asym rhs_abs(bool leads) const { return binomial(r1, e1, r2, e2, leads); }
  int rhs_sign() const {
    const Asym r = binomial(r1, e1, r2, e2, false);
    if (r.kind == Asym::Zero) return 0;
    if (r1 != 0 && (r2 == 0 || e1 < e2)) return sgn(r1);
    if (r2 != 0 && (r1 == 0 || e2 < e1)) return sgn(r2);
    return sgn(r1 + r2);
  }
};

ArcData arc_data(const SurfaceParams& p, const MonomialArc& arc) {
  if (arc.p < 1 || arc.q < 1) throw std::invalid_argument("arc exponents must be positive");
  if (arc.kappa.sign() <= 0 || arc.lambda.sign() == 0) throw std::invalid_argument("arc coefficients must be nonzero");
  ArcData d;
  d.xi = arc.kappa.to_mpq() * arc.sigma_x;
  const mpq_class lam = arc.lambda.to_mpq();
  d.zb = arc.root ? lam : qpow(lam, p.b);
  d.r1 = d.zb * qpow(d.xi, p.c);
  d.e1 = Rational(arc.q * p.b + arc.p * p.c);
  d.r2 = qpow(d.xi, p.d);
  d.e2 = Rational(arc.p * p.d);
  return d;
}

// |z coefficient|^(b-1)
Coeff z_abs_bm1(const SurfaceParams& p, const MonomialArc& arc) {
  const mpq_class lam = abs(arc.lambda.to_mpq());
  if (arc.root) return positive_rpow(Coeff(lam), Rational(p.b - 1, p.b));
  return Coeff(qpow(lam, p.b - 1));
}

bool rhs_feasible(const SurfaceParams& p, const ArcData& d) { return p.a % 2 == 1 || d.rhs_sign() >= 0; }

Asym single_arc(const SurfaceParams& p, Quantity quantity, const MonomialArc& arc, bool leads) {
  const ArcData d = arc_data(p, arc);
  const Rational P(arc.p), Q(arc.q);
  const Rational a(p.a), b(p.b), c(p.c), dd(p.d);
  auto known = [leads](const Rational& o, auto&& lead) {
    return Asym::known(o, leads ? std::optional<Coeff>(lead()) : std::nullopt);
  };
  const Asym r = d.rhs_abs(leads);
  const Asym y = rpow(r, Rational(1, p.a));
  const Asym x = known(P, [&] { return Coeff(mpq_class(abs(d.xi))); });
  const Asym gx = binomial(d.zb * qpow(d.xi, p.c - 1) * p.c, Q * b + P * (c - 1), qpow(d.xi, p.d - 1) * p.d,
                           P * (dd - 1), leads);  // |f_x| = |T1|
  const Asym gy = p.a == 1 ? Asym::known(Rational(0), Coeff(1L))
                           : mul(Asym::known(Rational(0), Coeff(long(p.a))), rpow(y, a - 1));
  const Rational gz_order = Q * (b - 1) + P * c;
  auto gz_lead = [&] { return z_abs_bm1(p, arc) * Coeff(qpow(mpq_class(abs(d.xi)), p.c)); };
  const Asym gz = known(gz_order, [&] { return gz_lead() * Coeff(long(p.b)); });

  switch (quantity) {
    case Quantity::A:
      return div(gz, combine({gx, gy}, true));
    case Quantity::Bpi: {
      const Asym num = binomial(d.r1 * (p.a - p.c), d.e1, d.r2 * (p.a - p.d), d.e2, leads);
      return div(num, mul(combine({x, y}, true), combine({gx, gy, gz}, true)));
    }
    case Quantity::Z:
      return div(gz, mul(combine({gx, gy, gz}, true), combine({x, y}, true)));
    case Quantity::W: {
      const Asym num = known(gz_order, gz_lead);
      const Asym s1 = combine({gx, rpow(r, Rational(p.a - 1, p.a))}, false);
      const Asym s2 = combine({x, y}, false);
      return div(num, mul(s1, s2));
    }
    default:
      throw std::invalid_argument("limit_along_arc handles A, Bpi, W and Z");
  }
}

// Normalized y: sign * rho * u^(o/a) (rhs / (c0 u^o))^(1/a).
struct YSeries {
  RadicalSeries y;
  Radical rho;
};

// First irrational |c0|^(1/a) among the given right-hand sides, else Q.
Radical radical_for(const SurfaceParams& p, std::initializer_list<const PuiseuxSeries*> rhs) {
  for (const PuiseuxSeries* r : rhs) {
    if (r->is_certified_zero()) continue;
    const Radical rad = Radical::root_of(abs(r->terms().front().coefficient.exact()), p.a);
    if (rad.n > 1) return rad;
  }
  return Radical{};
}

RadicalSeries y_series(const SurfaceParams& p, const PuiseuxSeries& rhs, const Radical& rho,
                       int branch, const Rational& depth) {
  if (rhs.is_certified_zero()) return RadicalSeries(rho);
  const Term& lead = rhs.terms().front();
  const mpq_class c0 = lead.coefficient.exact();
  if (p.a % 2 == 0 && c0 < 0) throw InfeasibleArc("no real y: right-hand side negative on the arc");
  const PuiseuxSeries h = rhs.scaled(Coeff(mpq_class(1 / c0))).shifted(-lead.exponent);
  const PuiseuxSeries root = rpow(h, Rational(1, p.a), depth).shifted(lead.exponent / Rational(p.a));
  const int sign = p.a % 2 == 1 ? (c0 < 0 ? -1 : 1) : branch;
  const Radical own = Radical::root_of(abs(c0), p.a);
  if (own.n == 1) return RadicalSeries(rho, root.scaled(Coeff(mpq_class(own.s * sign))));
  if (!(own == rho)) throw IncompatibleRadicals{};
  return RadicalSeries::rho_power_times(rho, 1, root.scaled(Coeff(long(sign))));
}

std::array<Asym, 2> pair_quantities(const SurfaceParams& p, const ArcPair& pair, const Rational& depth) {
  const MonomialArc& arc = pair.base;
  if (arc.root) throw std::invalid_argument("pair quantities are real-only");
  if (pair.e.sign() <= 0 || pair.delta.sign() == 0) throw std::invalid_argument("pair needs delta != 0, e > 0");
  const ArcData d = arc_data(p, arc);
  const Rational P(arc.p), Q(arc.q);
  const PuiseuxSeries x = mono(Coeff(d.xi), P);
  const PuiseuxSeries x2 = x * (mono(Coeff(1L), Rational(0)) + mono(Coeff(pair.delta), pair.e));
  const mpq_class lam = arc.lambda.to_mpq();
  const PuiseuxSeries zb = mono(Coeff(d.zb), Q * Rational(p.b));
  const PuiseuxSeries zbm1 = mono(Coeff(qpow(lam, p.b - 1)), Q * Rational(p.b - 1));
  const PuiseuxSeries rhs2 = zb * spow(x2, p.c) + spow(x2, p.d);
  const PuiseuxSeries rhs = d.rhs();
  if (!rhs_feasible(p, d)) throw InfeasibleArc("base arc has no real y");

  const Radical rho = radical_for(p, {&rhs, &rhs2});
  const RadicalSeries y = y_series(p, rhs, rho, arc.branch, depth);
  const RadicalSeries y2 = y_series(p, rhs2, rho, pair.branch, depth);

  auto lift = [&rho](const PuiseuxSeries& s) { return RadicalSeries(rho, s); };
  auto grad = [&](const PuiseuxSeries& xs, const RadicalSeries& ys) {
    const PuiseuxSeries fx = (zb * spow(xs, p.c - 1)).scaled(Coeff(long(-p.c))) +
                             spow(xs, p.d - 1).scaled(Coeff(long(-p.d)));
    const RadicalSeries fy = p.a == 1 ? lift(PuiseuxSeries::constant(Coeff(1L)))
                                      : pow(ys, static_cast<unsigned>(p.a - 1)).scaled(mpq_class(p.a));
    const PuiseuxSeries fz = (zbm1 * spow(xs, p.c)).scaled(Coeff(long(-p.b)));
    return std::array<RadicalSeries, 3>{lift(fx), fy, lift(fz)};
  };
  const auto g = grad(x, y);
  const auto g2 = grad(x2, y2);
  const RadicalSeries n = g[0] * g[0] + g[1] * g[1] + g[2] * g[2];
  const RadicalSeries n2 = g2[0] * g2[0] + g2[1] * g2[1] + g2[2] * g2[2];

  const Asym sep = combine({asym(x2 - x), asym(y2 - y)}, true);
  const Asym dist = combine({asym(x), asym(y)}, true);
  bool admissible = false;
  if (dist.kind == Asym::Known) {
    if (sep.kind == Asym::Zero) {
      admissible = true;
    } else if (sep.order > dist.order) {
      admissible = true;
    } else if (sep.kind == Asym::Known && sep.order == dist.order) {
      const Interval lhs = sep.lead->enclosure() * Interval(mpq_class(2 * kGamma));
      admissible = mpfr_cmp(lhs.hi(), dist.lead->enclosure().lo()) < 0;
    }
  }
  if (!admissible) throw InadmissiblePair("pair leaves the |q-q'| <= dist(q,Oz)/4 window");

  // D_ij = g_i g_j N' - g'_i g'_j N, symmetric in (i, j).
  std::array<std::array<Asym, 3>, 3> dm;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) dm[i][j] = dm[j][i] = asym(g[i] * g[j] * n2 - g2[i] * g2[j] * n);
  }
  auto column = [&](int j) { return combine({dm[0][j], dm[1][j], dm[2][j]}, true); };
  const Asym den = mul(mul(asym(n), asym(n2)), sep);
  const Asym l2 = div(column(2), den);
  const Asym l3 = div(mul(combine({column(0), column(1), column(2)}, false), dist), den);
  return {l2, l3};
}

std::string rational_tag(const Rational& r) {
  return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

}  // namespace

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::A: return "A";
    case Quantity::Bpi: return "Bpi";
    case Quantity::W: return "W";
    case Quantity::Z: return "Z";
    case Quantity::L2: return "L2";
    case Quantity::L3: return "L3";
  }
  return "?";
}

Quantity parse_quantity(const std::string& s) {
  for (Quantity q : {Quantity::A, Quantity::Bpi, Quantity::W, Quantity::Z, Quantity::L2, Quantity::L3}) {
    if (to_string(q) == s) return q;
  }
  throw std::invalid_argument("unknown quantity '" + s + "'");
}

std::string to_string(LimitClass c) {
  switch (c) {
    case LimitClass::TendsToZero: return "tends_to_zero";
    case LimitClass::BoundedNonzero: return "bounded_nonzero";
    case LimitClass::Unbounded: return "unbounded";
    case LimitClass::Indeterminate: return "indeterminate";
  }
  return "?";
}

std::string MonomialArc::to_string() const {
  std::ostringstream os;
  os << "x=" << (sigma_x < 0 ? "-" : "") << (kappa == Rational(1) ? "" : kappa.to_string() + "*") << "u^" << p
     << ", z" << (root ? "^b=" : "=") << (lambda == Rational(1) ? "" : lambda.to_string() + "*") << "u^"
     << (root ? "(" + std::to_string(q) + "b)" : std::to_string(q)) << ", branch " << (branch < 0 ? '-' : '+');
  return os.str();
}

void to_json(json& j, const MonomialArc& a) {
  j = json{{"p", a.p},
           {"q", a.q},
           {"sigma_x", a.sigma_x},
           {"kappa", rational_tag(a.kappa)},
           {"lambda", rational_tag(a.lambda)},
           {"branch", a.branch < 0 ? "-" : "+"},
           {"root", a.root},
           {"pair", nullptr}};
}

void from_json(const json& j, MonomialArc& a) {
  a = MonomialArc{};
  a.p = j.at("p").get<std::int64_t>();
  a.q = j.at("q").get<std::int64_t>();
  a.sigma_x = j.at("sigma_x").get<int>();
  if (j.contains("kappa")) a.kappa = Rational::parse(j.at("kappa").get<std::string>());
  a.lambda = Rational::parse(j.at("lambda").get<std::string>());
  a.branch = j.at("branch").get<std::string>() == "-" ? -1 : 1;
  if (j.contains("root")) a.root = j.at("root").get<bool>();
}

void to_json(json& j, const ArcPair& a) {
  j = a.base;
  j["pair"] = json{{"delta", rational_tag(a.delta)}, {"e", rational_tag(a.e)}, {"branch", a.branch < 0 ? "-" : "+"}};
}

void from_json(const json& j, ArcPair& a) {
  a.base = j.get<MonomialArc>();
  const json& pj = j.at("pair");
  a.delta = Rational::parse(pj.at("delta").get<std::string>());
  a.e = Rational::parse(pj.at("e").get<std::string>());
  a.branch = pj.at("branch").get<std::string>() == "-" ? -1 : 1;
}

bool feasible(const SurfaceParams& p, const MonomialArc& arc) {
  if (arc.root) return true;
  return rhs_feasible(p, arc_data(p, arc));
}

Substitution substitute(const SurfaceParams& p, const MonomialArc& arc, const Rational& depth) {
  if (arc.root) throw std::invalid_argument("substitute: root arcs have no real parametrization");
  const ArcData d = arc_data(p, arc);
  if (!rhs_feasible(p, d)) throw InfeasibleArc("no real y: right-hand side negative on the arc");
  Substitution s;
  s.x = mono(Coeff(d.xi), Rational(arc.p));
  s.z = mono(Coeff(arc.lambda), Rational(arc.q));
  s.rhs = d.rhs();
  s.y = s.rhs.is_certified_zero() ? RadicalSeries() : y_series(p, s.rhs, radical_for(p, {&s.rhs}), arc.branch, depth);
  return s;
}

RadicalSeries surface_residual(const SurfaceParams& p, const Substitution& s) {
  return pow(s.y, static_cast<unsigned>(p.a)) - RadicalSeries(s.y.radical(), s.rhs);
}

LimitClass limit_class(const std::optional<Rational>& order, bool identically_zero) {
  if (identically_zero) return LimitClass::TendsToZero;
  if (!order) return LimitClass::Indeterminate;
  if (order->sign() > 0) return LimitClass::TendsToZero;
  if (order->sign() == 0) return LimitClass::BoundedNonzero;
  return LimitClass::Unbounded;
}

LimitBehavior limit_along_arc(const SurfaceParams& p, Quantity quantity, const MonomialArc& arc,
                              const LimitOptions& options) {
  (void)options;  // single arcs combine exact binomials: no truncation, no straddle
  if (!arc.root && !feasible(p, arc)) throw InfeasibleArc("no real y along " + arc.to_string());
  const Asym fast = single_arc(p, quantity, arc, false);
  if (fast.kind == Asym::Known && fast.order.sign() <= 0) return behavior_of(single_arc(p, quantity, arc, true));
  return behavior_of(fast);
}

LimitBehavior limit_along_pair(const SurfaceParams& p, Quantity quantity, const ArcPair& pair,
                               const LimitOptions& options) {
  if (quantity != Quantity::L2 && quantity != Quantity::L3)
    throw std::invalid_argument("limit_along_pair handles L2 and L3");
  return limits_along_pair(p, pair, options)[quantity == Quantity::L2 ? 0 : 1];
}

std::array<LimitBehavior, 2> limits_along_pair(const SurfaceParams& p, const ArcPair& pair,
                                               const LimitOptions& options) {
  return escalate<2>([&](const Rational& depth) { return pair_quantities(p, pair, depth); }, options);
}

CriticalSet critical_lambdas(const SurfaceParams& p, std::int64_t px, std::int64_t qz, int sigma_x, Field field) {
  CriticalSet out;
  const std::int64_t m = p.d - p.c;
  if (m <= 0 || qz * p.b != px * m) return out;
  out.on_critical_slope = true;
  const int sm = (m % 2 == 0) ? 1 : sigma_x;  // sigma^(d-c)
  const mpq_class ratio(p.d, p.c);

  if (field == Field::Complex) {
    out.rhs_family_solvable = out.fx_family_solvable = true;
    out.values.push_back({Rational(1), Rational(-sm), "rhs"});
    const mpq_class v = -ratio * sm;
    out.values.push_back({Rational(1), Rational(v.get_num().get_si(), v.get_den().get_si()), "fx"});
    return out;
  }

  // lambda^b = -sm * k^m * (1 or d/c); real solutions need a positive value for b even.
  const int target_sign = -sm;
  const bool sign_ok = (p.b % 2 == 1) || target_sign > 0;
  if (!sign_ok) return out;
  out.rhs_family_solvable = true;
  out.values.push_back({Rational(1), Rational(target_sign), "rhs"});
  if (p.b % 2 == 0) out.values.push_back({Rational(1), Rational(-target_sign), "rhs"});

  // kappa = (d/c)^j makes (d/c) kappa^m a perfect b-th power when such j exists.
  for (std::int64_t j = 0; j < p.b; ++j) {
    mpq_class v = 1;
    for (std::int64_t i = 0; i < 1 + j * m; ++i) v *= ratio;
    if (auto root = exact_root(v, static_cast<unsigned long>(p.b))) {
      mpq_class kappa = 1;
      for (std::int64_t i = 0; i < j; ++i) kappa *= ratio;
      if (!kappa.get_num().fits_slong_p() || !kappa.get_den().fits_slong_p() ||
          !root->get_num().fits_slong_p() || !root->get_den().fits_slong_p()) {
        break;
      }
      const Rational k(kappa.get_num().get_si(), kappa.get_den().get_si());
      const Rational lam(root->get_num().get_si(), root->get_den().get_si());
      out.fx_family_solvable = true;
      out.values.push_back({k, lam * Rational(target_sign), "fx"});
      if (p.b % 2 == 0) out.values.push_back({k, -lam * Rational(target_sign), "fx"});
      break;
    }
  }
  return out;
}

}  // namespace strat
