#pragma once

// Runs every invariant of the kernel on one polygon and collects the results
// in a Report. Each check is isolated: an exception inside one check marks
// that check failed and the rest still run.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "cwpoly/io.hpp"

namespace cwpoly {

struct VerifyOptions {
  std::optional<Rational> a;  // half-width; 1/2 unless a ball is supplied
  std::optional<Rational> c;  // extra equidistant; defaults to a
  std::size_t steps = 16;
  double tol = 1e-6;
  std::size_t samples = 4;
  std::uint64_t seed = 0;
};

/// The ids of every check, in report order.
inline const std::vector<std::string>& verify_check_ids() {
  static const std::vector<std::string> ids{
      "ingest.convex",
      "ball.paired_form",
      "ball.dual_involution",
      "ball.primal_from_dual",
      "ball.dual_pairing",
      "ball.constant_width",
      "ball.width_all_directions",
      "geom.mixed_area_forms",
      "geom.isoperimetric",
      "cw.alpha_antisymmetry",
      "cw.beta_ladder",
      "cw.central_v_length_zero",
      "cw.barbier",
      "cw.barbier_equidistant",
      "cw.half_arc_length",
      "cw.half_area_difference",
      "cw.chakerian_constant",
      "cw.chakerian_closed_form",
      "cw.cusps_m_parity",
      "evolute.forms",
      "evolute.mu_opposite_sum",
      "evolute.equidistant_invariance",
      "evolute.cusps_parity",
      "involute.forms",
      "involute.evolute_round_trip",
      "involute.constant_v_width",
      "involute.signed_area_gap",
      "involute.signed_areas_nonnegative",
      "involute.containment",
      "iterate.signed_area_ledger",
      "iterate.diameter_monotone",
  };
  return ids;
}

namespace detail {

template <Scalar T>
struct VerifyContext {
  std::string input;
  Points<T> raw;
  std::optional<Points<T>> ball;
  VerifyOptions opts;

  std::optional<ConvexPolygon<T>> poly;
  std::optional<PairedPolygon<T>> p;
  std::optional<MinkowskiPlane<T>> plane;
  std::optional<CentralEquidistant<T>> cm;
  std::optional<IterationTrace<T>> trace;
  bool constant_width = false;
  T c{};
};

struct Outcome {
  std::string expected;
  std::string actual;
  bool pass = false;
};

inline Outcome outcome(std::string expected, std::string actual, bool pass) {
  return Outcome{std::move(expected), std::move(actual), pass};
}

template <Scalar T>
std::string str(const T& x) {
  return to_string(x);
}

inline std::string str(std::size_t x) { return std::to_string(x); }

template <Scalar T>
std::string str(const Vec2<T>& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

inline std::string cusp_str(const CuspReport& r) {
  if (r.degenerate) return "degenerate";
  std::string s = std::to_string(r.count()) + " at {";
  for (std::size_t i = 0; i < r.indices.size(); ++i) s += (i ? "," : "") + std::to_string(r.indices[i]);
  return s + "}";
}

template <Scalar T>
Outcome mismatch_at(const char* what, std::ptrdiff_t i, const std::string& expected, const std::string& actual) {
  return outcome(expected, std::string(what) + " differs at " + std::to_string(i) + ": " + actual, false);
}

template <Scalar T>
std::vector<std::pair<std::string, std::function<Outcome(VerifyContext<T>&)>>> verify_checks() {
  using Ctx = VerifyContext<T>;
  std::vector<std::pair<std::string, std::function<Outcome(Ctx&)>>> checks;
  auto add = [&](const char* id, std::function<Outcome(Ctx&)> fn) { checks.emplace_back(id, std::move(fn)); };

  add("ingest.convex", [](Ctx& x) {
    IngestReport rep;
    x.poly = ConvexPolygon<T>::from_points(x.raw, &rep);
    std::string note = std::to_string(x.poly->size()) + " vertices";
    if (rep.reversed) note += ", reversed";
    if (rep.duplicates_removed) note += ", " + std::to_string(rep.duplicates_removed) + " repeats dropped";
    if (rep.collinear_removed) note += ", " + std::to_string(rep.collinear_removed) + " collinear dropped";
    return outcome("convex", note, true);
  });

  add("ball.paired_form", [](Ctx& x) {
    x.p = reorder_parallel(*x.poly);
    validate_paired(*x.p);
    std::size_t k = x.poly->size();
    std::size_t j = count_parallel_pairs(*x.poly);
    return outcome("n = " + str(k - j), "n = " + str(x.p->n), x.p->n == k - j && x.p->size() == 2 * x.p->n);
  });

  add("ball.dual_involution", [](Ctx& x) {
    if (x.ball) {
      CenteredBall<T> u{Cyclic<Vec2<T>>(*x.ball)};
      validate_centered_ball(u);
      if (u.size() != x.p->size()) {
        x.plane = MinkowskiPlane<T>{u, dual_ball(u), u.n(), T(0)};
      } else {
        auto r = is_constant_width(*x.p, u);
        x.plane = MinkowskiPlane<T>{u, dual_ball(u), x.p->n, r.a};
      }
    } else {
      x.plane = make_plane(*x.p, scalar_from_rational<T>(x.opts.a.value_or(Rational(1, 2))));
    }
    const auto& u = x.plane->u;
    auto vv = dual_ball(x.plane->v);
    const auto n = static_cast<std::ptrdiff_t>(u.n());
    for (std::ptrdiff_t i = 0; i < 2 * n; ++i) {
      if (!same_point(vv[i], u[i + n + 1])) return mismatch_at<T>("V**", i, str(u[i + n + 1]), str(vv[i]));
    }
    return outcome("dual(dual(U)) = U shifted by n + 1", "equal", true);
  });

  add("ball.primal_from_dual", [](Ctx& x) {
    auto back = primal_from_dual(x.plane->v);
    bool ok = back.vertices == x.plane->u.vertices;
    if constexpr (!ScalarTraits<T>::exact) {
      ok = true;
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(back.size()); ++i) {
        ok = ok && same_point(back[i], x.plane->u[i]);
      }
    }
    return outcome("U", ok ? "U" : "different polygon", ok);
  });

  add("ball.dual_pairing", [](Ctx& x) {
    const auto& u = x.plane->u;
    const auto& v = x.plane->v;
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(u.size()); ++i) {
      T a = det(u[i], v[i]);
      T b = det(u[i + 1], v[i]);
      if (!same(a, T(1)) || !same(b, T(1))) return mismatch_at<T>("[U, V]", i, "1", str(a) + ", " + str(b));
    }
    return outcome("[U_i, V_i] = [U_{i+1}, V_i] = 1", "all 1", true);
  });

  add("ball.constant_width", [](Ctx& x) {
    if (x.plane->u.size() != x.p->size()) {
      return outcome("constant width", "not constant width: " + str(x.p->size()) + " paired vertices against a ball of " +
                                            str(x.plane->u.size()),
                     false);
    }
    auto r = is_constant_width(*x.p, x.plane->u);
    x.constant_width = r.constant;
    std::string expected = "constant width, a = " + str(x.plane->a);
    if (!r.constant) {
      return outcome(expected, "not constant width, witness index " + (r.witness ? str(*r.witness) : std::string("none")),
                     false);
    }
    x.plane->a = r.a;
    x.c = x.opts.c ? scalar_from_rational<T>(*x.opts.c) : r.a;
    x.cm = central_equidistant(*x.p, x.plane->u);
    return outcome(expected, "constant width, a = " + str(r.a), same(r.a, x.plane->a));
  });

  add("ball.width_all_directions", [](Ctx& x) {
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(x.plane->v.size()); ++i) {
      T w = width(as_span(x.p->vertices), x.plane->v[i]);
      if (!same(w, T(2) * x.plane->a)) return mismatch_at<T>("width", i, str(T(2) * x.plane->a), str(w));
    }
    return outcome(str(T(2) * x.plane->a), str(T(2) * x.plane->a), true);
  });

  add("geom.mixed_area_forms", [](Ctx& x) {
    T m1 = mixed_area(x.p->vertices, x.plane->u.vertices);
    T m2 = mixed_area_alt(as_span(x.p->vertices), as_span(x.plane->u.vertices));
    return outcome(str(m1), str(m2), same(m1, m2));
  });

  add("geom.isoperimetric", [](Ctx& x) {
    // A(P, U)^2 >= A(P) A(U)
    T m = mixed_area(x.p->vertices, x.plane->u.vertices);
    T lhs = m * m;
    T rhs = polygon_area(x.p->vertices) * polygon_area(x.plane->u.vertices);
    return outcome(">= " + str(rhs), str(lhs), sign(T(lhs - rhs)) >= 0);
  });

  add("cw.alpha_antisymmetry", [](Ctx& x) {
    const auto& al = x.cm->alphas;
    const auto n = static_cast<std::ptrdiff_t>(x.cm->n);
    for (std::ptrdiff_t i = 0; i < 2 * n; ++i) {
      if (!same(al[i + n], T(-al[i]))) return mismatch_at<T>("alpha", i, str(T(-al[i])), str(al[i + n]));
    }
    return outcome("alpha_{i+n} = -alpha_i", "holds", true);
  });

  add("cw.beta_ladder", [](Ctx& x) {
    const auto& al = x.cm->alphas;
    const auto& b = x.cm->betas;
    const auto& u = x.plane->u;
    const auto n = static_cast<std::ptrdiff_t>(x.cm->n);
    for (std::ptrdiff_t i = 0; i < 2 * n; ++i) {
      T sum(0);
      for (std::ptrdiff_t j = i; j < i + n; ++j) sum += al[j] * det(u[j], u[j + 1]);
      T expected = sum / T(2);
      if (!same(b[i], expected)) return mismatch_at<T>("beta", i, str(expected), str(b[i]));
      if (!same(b[i + n], T(-b[i]))) return mismatch_at<T>("beta antisymmetry", i, str(T(-b[i])), str(b[i + n]));
    }
    return outcome("beta_i = (1/2) sum alpha_j [U_j, U_{j+1}]", "holds", true);
  });

  add("cw.central_v_length_zero", [](Ctx& x) {
    T len = v_length(x.cm->m, x.plane->v);
    return outcome("0", str(len), is_zero(len));
  });

  add("cw.barbier", [](Ctx& x) {
    auto r = barbier(*x.cm, x.plane->u, x.plane->v, x.plane->a);
    return outcome(str(r.expected), str(r.actual), r.agree());
  });

  add("cw.barbier_equidistant", [](Ctx& x) {
    auto r = barbier(*x.cm, x.plane->u, x.plane->v, x.c);
    return outcome(str(r.expected), str(r.actual), r.agree());
  });

  add("cw.half_arc_length", [](Ctx& x) {
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(x.cm->n); ++i) {
      T got = half_arc_length(*x.cm, x.plane->u, x.plane->v, i, x.c);
      T want = half_arc_length_formula(*x.cm, x.plane->u, i, x.c);
      if (!same(got, want)) return mismatch_at<T>("L_V(i, c)", i, str(want), str(got));
    }
    return outcome("c A(U) + 2 beta_i", "holds for every i", true);
  });

  add("cw.half_area_difference", [](Ctx& x) {
    T c = std::max(x.c, convexity_threshold(x.cm->alphas));
    T total = polygon_area(equidistant(*x.cm, x.plane->u, c).vertices);
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(x.cm->n); ++i) {
      auto h = half_area_identity(*x.cm, x.plane->u, i, c);
      if (!same(T(h.a1 - h.a2), h.four_c_beta)) return mismatch_at<T>("A1 - A2", i, str(h.four_c_beta), str(T(h.a1 - h.a2)));
      if (!same(T(h.a1 + h.a2), total)) return mismatch_at<T>("A1 + A2", i, str(total), str(T(h.a1 + h.a2)));
    }
    return outcome("A1 - A2 = 4 c beta_i", "holds for every i at c = " + str(c), true);
  });

  add("cw.chakerian_constant", [](Ctx& x) {
    T c = std::max(x.c, convexity_threshold(x.cm->alphas));
    auto r = chakerian(*x.cm, x.plane->u, x.plane->v, c);
    return outcome(str(r.values.front()) + " for every i", r.constant ? "constant" : "varies", r.constant);
  });

  add("cw.chakerian_closed_form", [](Ctx& x) {
    T c = std::max(x.c, convexity_threshold(x.cm->alphas));
    auto r = chakerian(*x.cm, x.plane->u, x.plane->v, c);
    return outcome(str(r.closed_rhs), str(r.closed_lhs), same(r.closed_lhs, r.closed_rhs));
  });

  add("cw.cusps_m_parity", [](Ctx& x) {
    auto r = cusps_of_m(*x.cm);
    if (r.degenerate) return outcome("odd and >= 3, or degenerate", "degenerate", x.cm->degenerate);
    return outcome("odd and >= 3", cusp_str(r), r.count() % 2 == 1 && r.count() >= 3);
  });

  add("evolute.forms", [](Ctx& x) {
    auto ev = evolute(*x.p, x.plane->u, x.plane->v);
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(ev.e.size()); ++i) {
      Vec2<T> alt = x.cm->m[i] - x.cm->alphas[i] * x.plane->u[i];
      if (!same_point(ev.e[i], alt)) return mismatch_at<T>("E", i, str(alt), str(ev.e[i]));
    }
    return outcome("P_i - mu U_i = P_{i+1} - mu U_{i+1}", "agree", true);
  });

  add("evolute.mu_opposite_sum", [](Ctx& x) {
    auto ev = evolute(*x.p, x.plane->u, x.plane->v);
    const auto n = static_cast<std::ptrdiff_t>(x.p->n);
    T want = T(2) * x.plane->a;
    for (std::ptrdiff_t i = 0; i < 2 * n; ++i) {
      T s = ev.mus[i] + ev.mus[i + n];
      if (!same(s, want)) return mismatch_at<T>("mu_i + mu_{i+n}", i, str(want), str(s));
    }
    return outcome(str(want), str(want), true);
  });

  add("evolute.equidistant_invariance", [](Ctx& x) {
    auto e0 = evolute(*x.p, x.plane->u, x.plane->v);
    auto e1 = evolute(equidistant(*x.cm, x.plane->u, x.c), x.plane->u, x.plane->v);
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(e0.e.size()); ++i) {
      if (!same_point(e0.e[i], e1.e[i])) return mismatch_at<T>("E", i, str(e0.e[i]), str(e1.e[i]));
    }
    return outcome("E(P) = E(P(c))", "equal", true);
  });

  add("evolute.cusps_parity", [](Ctx& x) {
    auto ce = evolute_cusps(evolute(*x.p, x.plane->u, x.plane->v));
    auto cm = cusps_of_m(*x.cm);
    if (ce.degenerate || cm.degenerate) {
      return outcome("odd and >= cusps of M, or degenerate", cusp_str(ce), x.cm->degenerate || ce.degenerate);
    }
    return outcome("odd and >= " + str(cm.count()), cusp_str(ce), ce.count() % 2 == 1 && ce.count() >= cm.count());
  });

  add("involute.forms", [](Ctx& x) {
    auto inv = involute(*x.cm, x.plane->u, x.plane->v);
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(inv.n.size()); ++i) {
      Vec2<T> a = x.cm->m[i] + x.cm->betas[i] * x.plane->v[i];
      Vec2<T> b = x.cm->m[i + 1] + x.cm->betas[i + 1] * x.plane->v[i];
      if (!same_point(a, b) || !same_point(a, inv.n[i])) return mismatch_at<T>("N", i, str(a), str(b));
    }
    return outcome("M_i + beta_i V_i = M_{i+1} + beta_{i+1} V_i", "agree", true);
  });

  add("involute.evolute_round_trip", [](Ctx& x) {
    auto inv = involute(*x.cm, x.plane->u, x.plane->v);
    auto w = dual_ball(x.plane->v);
    auto ev = evolute(PairedPolygon<T>{inv.n, x.p->n}, x.plane->v, w);
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(ev.e.size()); ++i) {
      if (!same_point(ev.e[i], x.cm->m[i + 1])) return mismatch_at<T>("E(N)", i, str(x.cm->m[i + 1]), str(ev.e[i]));
    }
    return outcome("evolute of N is M", "equal", true);
  });

  add("involute.constant_v_width", [](Ctx& x) {
    auto inv = involute(*x.cm, x.plane->u, x.plane->v);
    T len = v_length(inv.n, dual_ball(x.plane->v));
    return outcome("0", str(len), is_zero(len));
  });

  add("involute.signed_area_gap", [](Ctx& x) {
    auto inv = involute(*x.cm, x.plane->u, x.plane->v);
    T gap = signed_area(x.cm->m) - signed_area(inv.n);
    T want = signed_area_gap(inv.betas, x.plane->v.vertices);
    return outcome(str(want), str(gap), same(gap, want));
  });

  add("involute.signed_areas_nonnegative", [](Ctx& x) {
    auto inv = involute(*x.cm, x.plane->u, x.plane->v);
    T sm = signed_area(x.cm->m);
    T sn = signed_area(inv.n);
    return outcome("SA(M) >= SA(N) >= 0", "SA(M) = " + str(sm) + ", SA(N) = " + str(sn),
                   sign(sn) >= 0 && sign(T(sm - sn)) >= 0);
  });

  add("involute.containment", [](Ctx& x) {
    auto inv = involute(*x.cm, x.plane->u, x.plane->v);
    auto r = containment_check(inv.n, x.cm->m, x.plane->u.vertices, x.opts.samples);
    std::string actual = std::to_string(r.samples - r.witnesses.size()) + " of " + std::to_string(r.samples);
    if (!r.witnesses.empty()) actual += ", first outside " + str(r.witnesses.front());
    return outcome(std::to_string(r.samples) + " of " + std::to_string(r.samples) + " inside", actual, r.contained);
  });

  add("iterate.signed_area_ledger", [](Ctx& x) {
    T tol = scalar_from_rational<T>(rational_from_double(x.opts.tol));
    x.trace = iterate_involutes(*x.p, *x.plane, x.opts.steps, tol);
    const auto& steps = x.trace->steps;
    T spent(0);
    for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
      const auto& cur = steps[k];
      const auto& next = steps[k + 1];
      T g1 = cur.sa_m - *next.sa_n;
      T g2 = *next.sa_n - next.sa_m;
      if (!same(g1, *cur.gap_to_next_n)) return mismatch_at<T>("SA(M) - SA(N)", k, str(*cur.gap_to_next_n), str(g1));
      if (!same(g2, *next.gap_from_n)) return mismatch_at<T>("SA(N) - SA(M)", k, str(*next.gap_from_n), str(g2));
      if (sign(g1) < 0 || sign(g2) < 0 || sign(next.sa_m) < 0) return mismatch_at<T>("monotone", k, ">= 0", str(g1) + ", " + str(g2));
      spent += g1 + g2;
      if (sign(T(steps[0].sa_m - spent)) < 0) return mismatch_at<T>("prefix bound", k, "<= " + str(steps[0].sa_m), str(spent));
    }
    return outcome("SA(M(0)) - sum of gaps = SA(M(k))", str(steps.size() - 1) + " steps, SA(M) " + str(steps.front().sa_m) +
                                                          " -> " + str(steps.back().sa_m),
                   same(T(steps[0].sa_m - spent), steps.back().sa_m));
  });

  add("iterate.diameter_monotone", [](Ctx& x) {
    if (!x.trace) throw GeometryError(ErrorKind::identity_failure, "no trace");
    const auto& steps = x.trace->steps;
    for (std::size_t k = 1; k < steps.size(); ++k) {
      if (sign(T(steps[k].diameter_sq - steps[k - 1].diameter_sq)) > 0) {
        return mismatch_at<T>("diameter", k, "<= " + std::to_string(steps[k - 1].diameter), std::to_string(steps[k].diameter));
      }
    }
    return outcome("non-increasing", "O = " + str(x.trace->o) + ", radius " + ScalarTraits<double>::to_string(x.trace->error_radius),
                   true);
  });

  return checks;
}

}  // namespace detail

/// Checks that need the polygon to have constant width in the chosen ball are
/// reported as failed without running when it does not.
template <Scalar T>
Report verify_document(const PolygonDocument& doc, const VerifyOptions& opts) {
  detail::VerifyContext<T> ctx;
  ctx.input = doc.name;
  ctx.opts = opts;
  for (const auto& q : doc.vertices) ctx.raw.push_back({scalar_from_rational<T>(q.x), scalar_from_rational<T>(q.y)});
  if (doc.ball) {
    Points<T> b;
    for (const auto& q : *doc.ball) b.push_back({scalar_from_rational<T>(q.x), scalar_from_rational<T>(q.y)});
    ctx.ball = std::move(b);
  }

  Report report;
  report.input = doc.name;
  report.backend = ScalarTraits<T>::name;
  report.seed = opts.seed;
  std::optional<std::string> blocked;
  for (auto& [id, fn] : detail::verify_checks<T>()) {
    CheckRecord rec;
    rec.check_id = id;
    if (blocked) {
      rec.expected = "runs";
      rec.actual = "not run: " + *blocked;
      report.checks.push_back(std::move(rec));
      continue;
    }
    try {
      auto out = fn(ctx);
      rec.expected = std::move(out.expected);
      rec.actual = std::move(out.actual);
      rec.pass = out.pass;
    } catch (const GeometryError& e) {
      rec.expected = "no error";
      rec.actual = e.what();
    }
    // Nothing downstream can run without a paired polygon, a ball and
    // constant width.
    if (!rec.pass && (id == "ingest.convex" || id == "ball.paired_form" || id == "ball.dual_involution" ||
                      id == "ball.constant_width")) {
      blocked = id + " failed";
    }
    report.checks.push_back(std::move(rec));
  }
  return report;
}

}  // namespace cwpoly
