#include "ybg/verify.hpp"

#include <functional>

#include "ybg/solver.hpp"

namespace ybg::verify {

namespace {

Check make_check(std::string name, int samples, const std::function<std::string()>& body) {
  Check c;
  c.name = std::move(name);
  c.samples = samples;
  try {
    c.witness = body();
    c.pass = c.witness.empty();
  } catch (const std::exception& e) {
    c.pass = false;
    c.witness = e.what();
  }
  return c;
}

// worked fixtures shared across checks
SixVertexMatrix fx_r() { return six_vertex(5, 5, 4, 2, 3, 1); }
SixVertexMatrix fx_g_a() { return six_vertex(0, 0, 2, 3, 6, 1); }
SixVertexMatrix fx_u_cap_b() { return six_vertex(-2, -6, -2, -3, 1, 6); }

ObjectLabel random_label(Rng& rng) {
  return object_label(rng.nonzero_scalar(), rng.nonzero_scalar());
}

NfElement sample_interior(const ObjectLabel& d, FiberSide side, Rng& rng) {
  // resample until the matrix is in Omega_circ (fibers occasionally land in
  // Omega_B, which some checks exclude)
  for (int i = 0; i < 64; ++i) {
    NfElement e = sample_fiber(d, side, rng);
    if (classify(e.matrix).tag == RegionTag::OmegaCirc) return e;
  }
  fail(Errc::ExhaustedRetries, "no Omega_circ fiber point found");
}

enum class Stratum { Interior, GammaB, GammaA, OmegaCapB };

SixVertexMatrix random_gamma_b_matrix(Rng& rng) {
  Scalar a1 = rng.nonzero_scalar(), a2 = rng.nonzero_scalar(), c1 = rng.nonzero_scalar();
  return six_vertex(a1, a2, 0, 0, c1, a1 * a2 / c1);
}

SixVertexMatrix random_gamma_a_matrix(Rng& rng) {
  Scalar b1 = rng.nonzero_scalar(), b2 = rng.nonzero_scalar(), c1 = rng.nonzero_scalar();
  return six_vertex(0, 0, b1, b2, c1, b1 * b2 / c1);
}

// Delta(e) = alpha on the requested stratum.
NfElement make_with_delta(const ObjectLabel& alpha, Stratum s, Rng& rng) {
  switch (s) {
    case Stratum::Interior:
      return sample_fiber(alpha, FiberSide::Source, rng);
    case Stratum::GammaB:
      return boundary_element(random_gamma_b_matrix(rng), alpha.d1, alpha.d2);
    case Stratum::GammaA:
      return boundary_element(random_gamma_a_matrix(rng), alpha.d1, alpha.d2);
    case Stratum::OmegaCapB: {
      // source draw pinned to det(B) = 0: a2 := d1 b1 makes every derived
      // weight automatically nonzero
      Scalar a1 = rng.nonzero_scalar(), b1 = rng.nonzero_scalar(), c1 = rng.nonzero_scalar();
      return fiber_element(alpha, FiberSide::Source, a1, alpha.d1 * b1, b1, c1);
    }
  }
  fail(Errc::DegenerateInput, "unreachable");
}

// Delta(e*) = sigma on the requested stratum.
NfElement make_with_delta_star(const ObjectLabel& sigma, Stratum s, Rng& rng) {
  switch (s) {
    case Stratum::Interior:
      return sample_fiber(sigma, FiberSide::Target, rng);
    case Stratum::GammaB: {
      SixVertexMatrix m = random_gamma_b_matrix(rng);
      return boundary_element(m, (m.a2 / m.a1) * sigma.d1, (m.a1 / m.a2) * sigma.d2);
    }
    case Stratum::GammaA: {
      SixVertexMatrix m = random_gamma_a_matrix(rng);
      return boundary_element(m, (m.b2 / m.b1) * sigma.d2, (m.b1 / m.b2) * sigma.d1);
    }
    case Stratum::OmegaCapB: {
      Scalar a2 = rng.nonzero_scalar(), b1 = rng.nonzero_scalar(), c1 = rng.nonzero_scalar();
      return fiber_element(sigma, FiberSide::Target, sigma.d1 * b1, a2, b1, c1);
    }
  }
  fail(Errc::DegenerateInput, "unreachable");
}

struct Chain {
  NfElement u, v, t;
};

// u * v and v * t both defined, with the middle and end strata as requested.
Chain make_chain(Stratum su, Stratum sv, Stratum st, Rng& rng) {
  NfElement v = [&] {
    switch (sv) {
      case Stratum::Interior:
        return sample_fiber(random_label(rng), FiberSide::Target, rng);
      case Stratum::GammaB:
        return boundary_element(random_gamma_b_matrix(rng), rng.nonzero_scalar(),
                                rng.nonzero_scalar());
      case Stratum::GammaA:
        return boundary_element(random_gamma_a_matrix(rng), rng.nonzero_scalar(),
                                rng.nonzero_scalar());
      case Stratum::OmegaCapB:
        return make_with_delta(random_label(rng), Stratum::OmegaCapB, rng);
    }
    fail(Errc::DegenerateInput, "unreachable");
  }();
  Chain c{make_with_delta(nf_delta_star(v), su, rng), v,
          make_with_delta_star(nf_delta(v), st, rng)};
  return c;
}

}  // namespace

bool SuiteReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Check cf_parametrized_ybe(int samples, std::uint64_t seed) {
  return make_check("cf_parametrized_ybe", samples, [=]() -> std::string {
    Rng rng(seed);
    for (int k = 0; k < samples; ++k) {
      Scalar q1 = rng.nonzero_scalar(), q2 = rng.nonzero_scalar();
      while (q2 == q1) q2 = rng.nonzero_scalar();
      Scalar z1 = rng.nonzero_scalar(), z2 = rng.nonzero_scalar();
      Scalar z3 = rng.nonzero_scalar(), z4 = rng.nonzero_scalar();
      Scalar w1 = rng.nonzero_scalar(), w2 = rng.nonzero_scalar();
      SixVertexMatrix u = weights_cf(q1, q2, z1, z2, w1);
      SixVertexMatrix w = weights_cf(q1, q2, z1 * z3, z2 * z4, w1 * w2);
      SixVertexMatrix v = weights_cf(q1, q2, z3, z4, w2);
      if (!yb_commutator(u, w, v).is_zero())
        return "nonzero commutator at sample " + std::to_string(k);
      if (u.a1 != u.a2) return "field-free condition a1 = a2 violated";
    }
    return "";
  });
}

Check ff_parametrized_ybe(int samples, std::uint64_t seed) {
  return make_check("ff_parametrized_ybe", samples, [=]() -> std::string {
    Rng rng(seed);
    for (int k = 0; k < samples; ++k) {
      Scalar q1 = rng.nonzero_scalar(), q2 = rng.nonzero_scalar();
      while (q2 == q1) q2 = rng.nonzero_scalar();
      Scalar z1 = rng.nonzero_scalar(), z2 = rng.nonzero_scalar();
      Scalar z3 = rng.nonzero_scalar(), z4 = rng.nonzero_scalar();
      Scalar w1 = rng.nonzero_scalar(), w2 = rng.nonzero_scalar();
      SixVertexMatrix u = weights_ff(q1, q2, z1, z2, w1);
      SixVertexMatrix w = weights_ff(q1, q2, z1 * z3, z2 * z4, w1 * w2);
      SixVertexMatrix v = weights_ff(q1, q2, z3, z4, w2);
      if (!n_value(u).is_zero() || !n_value(w).is_zero() || !n_value(v).is_zero())
        return "ff family output with N != 0 at sample " + std::to_string(k);
      if (!yb_commutator(u, w, v).is_zero())
        return "nonzero commutator at sample " + std::to_string(k);
    }
    return "";
  });
}

Check solver_oracle_agreement(int samples, std::uint64_t seed) {
  return make_check("solver_oracle_agreement", samples, [=]() -> std::string {
    Rng rng(seed);
    for (int k = 0; k < samples; ++k) {
      ObjectLabel d = random_label(rng);
      NfElement u = sample_fiber(d, FiberSide::Source, rng);
      NfElement v = sample_fiber(d, FiberSide::Target, rng);
      SixVertexMatrix w = solve_w(u.matrix, v.matrix);
      BruteForceResult bf = brute_force_w(u.matrix, v.matrix);
      if (!bf.is_ray() || bf.nullity != 1)
        return "oracle did not return a ray for a composable pair, sample " + std::to_string(k);
      if (*bf.ray != w) return "oracle ray differs from solve_w at sample " + std::to_string(k);
      if (!yb_commutator(u.matrix, w, v.matrix).is_zero())
        return "solve_w output fails the Yang-Baxter equation at sample " + std::to_string(k);
    }
    int rejected = 0, guard = 0;
    while (rejected < samples && ++guard < samples * 4) {
      NfElement u = sample_fiber(random_label(rng), FiberSide::Source, rng);
      NfElement v = sample_fiber(random_label(rng), FiberSide::Source, rng);
      if (wcond_holds(u.matrix, v.matrix)) continue;  // accidental match: redraw
      if (!brute_force_w(u.matrix, v.matrix).is_absent())
        return "oracle found a solution for an incompatible pair, sample " +
               std::to_string(rejected);
      ++rejected;
    }
    if (rejected < samples) return "could not draw enough incompatible pairs";
    return "";
  });
}

Check worked_solution() {
  return make_check("worked_solution_rr", 0, [&]() -> std::string {
    SixVertexMatrix r = fx_r();
    SixVertexMatrix expected = six_vertex(17, 17, 16, 8, 9, 1);
    SixVertexMatrix w = solve_w(r, r);
    if (w != expected) return "solve_w(r,r) = " + to_string(w);
    if (w != weights_cf(2, 1, 9, 1, 1)) return "group law value mismatch";
    if (brute_force_equation_count(r, r) != 14)
      return "expected 14 bilinear equations";
    BruteForceResult bf = brute_force_w(r, r);
    if (!bf.is_ray() || *bf.ray != expected) return "oracle ray mismatch";
    return "";
  });
}

Check six_commutator_variants(int samples, std::uint64_t seed) {
  return make_check("six_commutator_variants", samples, [=]() -> std::string {
    Rng rng(seed);
    int done = 0, guard = 0;
    while (done < samples && ++guard < samples * 50) {
      ObjectLabel d = random_label(rng);
      NfElement ue = sample_interior(d, FiberSide::Source, rng);
      NfElement ve = sample_interior(d, FiberSide::Target, rng);
      SixVertexMatrix u = ue.matrix, v = ve.matrix;
      SixVertexMatrix w = solve_w(u, v);
      Region rw = classify(w);
      if (!rw.in_s_times) continue;  // need w invertible for the variants
      SixVertexMatrix us = star(u), vs = star(v), ws = star(w);
      if (!yb_commutator(u, w, v).is_zero() || !yb_commutator(us, v, w).is_zero() ||
          !yb_commutator(w, u, vs).is_zero() || !yb_commutator(v, us, ws).is_zero() ||
          !yb_commutator(ws, vs, u).is_zero() || !yb_commutator(vs, ws, us).is_zero())
        return "a commutator variant is nonzero for triple " + to_string(u) + ", " +
               to_string(w) + ", " + to_string(v);
      ++done;
    }
    if (done < samples) return "could not build enough invertible triples";
    return "";
  });
}

Check solution_weight_identities(int samples, std::uint64_t seed) {
  return make_check("solution_weight_identities", samples, [=]() -> std::string {
    Rng rng(seed);
    for (int k = 0; k < samples; ++k) {
      ObjectLabel d = random_label(rng);
      SixVertexMatrix u = sample_interior(d, FiberSide::Source, rng).matrix;
      SixVertexMatrix v = sample_interior(d, FiberSide::Target, rng).matrix;
      SixVertexMatrix w = solve_w(u, v);
      Scalar nu = n_value(u), nv = n_value(v), nw = n_value(w);
      bool ok = v.a1 * v.b1 * nw == w.a1 * w.b1 * nv && v.a2 * v.b2 * nw == w.a2 * w.b2 * nv &&
                w.a1 * w.b2 * nu == u.a1 * u.b2 * nw && w.a2 * w.b1 * nu == u.a2 * u.b1 * nw;
      if (!ok) return "weight identity fails at sample " + std::to_string(k);
      if (classify(w).tag == RegionTag::OmegaCirc) {
        // label equalities of an interior triple, plus block constancy
        auto [dw, dws] = delta_pair(w);
        auto [du, dus] = delta_pair(u);
        auto [dv, dvs] = delta_pair(v);
        if (!(dv == dw) || !(du == dvs) || !(dws == dus))
          return "triple label equalities fail at sample " + std::to_string(k);
        Scalar d0 = du.d1 * du.d2;
        if (dv.d1 * dv.d2 != d0 || dw.d1 * dw.d2 != d0)
          return "block invariant not constant at sample " + std::to_string(k);
      }
    }
    return "";
  });
}

std::pair<Check, Check> nf_axioms_and_transport(int samples, std::uint64_t seed) {
  std::string axiom_witness, transport_witness;
  int boundary_chains = 0;

  auto checked_compose = [&](const NfElement& x, const NfElement& y) {
    NfElement w = compose(x, y);
    if (transport_witness.empty()) {
      if (!(nf_delta(w) == nf_delta(y)))
        transport_witness = "Delta(x*y) != Delta(y) for " + to_string(x) + " , " + to_string(y);
      else if (!(nf_delta_star(w) == nf_delta_star(x)))
        transport_witness = "Delta((x*y)') != Delta(x') for " + to_string(x) + " , " + to_string(y);
      else if (delta0(w) != delta0(x) || delta0(w) != delta0(y))
        transport_witness = "block Delta0 not constant across " + to_string(x) + " , " + to_string(y);
    }
    return w;
  };

  try {
    Rng rng(seed);
    const Stratum strata[] = {Stratum::GammaB, Stratum::GammaA, Stratum::OmegaCapB};
    for (int k = 0; k < samples && axiom_witness.empty(); ++k) {
      Stratum su = Stratum::Interior, sv = Stratum::Interior, st = Stratum::Interior;
      // weave boundary strata through at least a fifth of the chains
      if (k % 5 == 0) {
        int pick = k / 5;
        Stratum s = strata[pick % 3];
        switch (pick % 4) {
          case 0: sv = s; break;
          case 1: su = s; break;
          case 2: st = s; break;
          case 3: su = Stratum::GammaA; sv = Stratum::GammaA; break;  // doubly degenerate
        }
        ++boundary_chains;
      }
      Chain c = make_chain(su, sv, st, rng);
      NfElement s1 = checked_compose(c.u, c.v);
      NfElement s2 = checked_compose(c.v, c.t);
      if (!(checked_compose(s1, c.t) == checked_compose(c.u, s2))) {
        axiom_witness = "associativity fails for a chain at sample " + std::to_string(k);
        break;
      }
      // inverse axiom
      NfElement ui = nf_inverse(c.u);
      if (!(checked_compose(c.u, ui) == idempotent(nf_delta_star(c.u))) ||
          !(checked_compose(ui, c.u) == idempotent(nf_delta(c.u)))) {
        axiom_witness = "inverse axiom fails at sample " + std::to_string(k);
        break;
      }
      NfElement vi = nf_inverse(c.v);
      if (!(checked_compose(s1, vi) == c.u) ||
          !(checked_compose(vi, checked_compose(c.v, c.t)) == c.t)) {
        axiom_witness = "cancellation fails at sample " + std::to_string(k);
        break;
      }
      // anti-homomorphism
      if (!(nf_inverse(s1) == checked_compose(vi, ui))) {
        axiom_witness = "(u*v)' != v'*u' at sample " + std::to_string(k);
        break;
      }
      // idempotent laws
      NfElement idm = idempotent(nf_delta(c.u));
      if (!(checked_compose(idm, idm) == idm) ||
          !(checked_compose(c.u, idempotent(nf_delta(c.u))) == c.u) ||
          !(checked_compose(idempotent(nf_delta_star(c.u)), c.u) == c.u)) {
        axiom_witness = "idempotent law fails at sample " + std::to_string(k);
        break;
      }
    }
    if (axiom_witness.empty() && boundary_chains < samples / 5)
      axiom_witness = "not enough boundary chains exercised";
  } catch (const std::exception& e) {
    axiom_witness = e.what();
  }

  Check axioms{"nf_groupoid_axioms", axiom_witness.empty(), samples, axiom_witness};
  Check transport{"nf_delta_transport", transport_witness.empty(), samples, transport_witness};
  return {axioms, transport};
}

Check nf_star_structure(int samples, std::uint64_t seed) {
  return make_check("nf_star_structure", samples, [=]() -> std::string {
    // worked boundary interchange: (g_a, 1, 2) -> Omega_B element
    NfElement ga = boundary_element(fx_g_a(), 1, 2);
    NfElement s = nf_star(ga);
    if (!(s == nf_element(fx_u_cap_b(), 3, Scalar(Rational(2, 3)))))
      return "star of (g_a,1,2) mismatch: " + to_string(s);
    if (classify(s.matrix).tag != RegionTag::OmegaCapB) return "expected an Omega_B landing";
    if (!(nf_star(s) == ga)) return "double star not the identity on the worked example";

    Rng rng(seed);
    const Stratum strata[] = {Stratum::Interior, Stratum::GammaB, Stratum::GammaA,
                              Stratum::OmegaCapB};
    for (int k = 0; k < samples; ++k) {
      Stratum st = strata[k % 4];
      NfElement e = make_with_delta(random_label(rng), st, rng);
      NfElement se = nf_star(e);
      if (!(nf_star(se) == e)) return "star not an involution at sample " + std::to_string(k);
      if (!(nf_inverse(nf_inverse(e)) == e))
        return "double inverse not the identity at sample " + std::to_string(k);
      RegionTag before = classify(e.matrix).tag, after = classify(se.matrix).tag;
      bool transport_ok =
          (before == RegionTag::OmegaCirc && after == RegionTag::OmegaCirc) ||
          (before == RegionTag::OmegaLowB && after == RegionTag::OmegaLowB) ||
          (before == RegionTag::OmegaLowA && after == RegionTag::OmegaCapB) ||
          (before == RegionTag::OmegaCapB && after == RegionTag::OmegaLowA);
      if (!transport_ok)
        return std::string("star region transport violated: ") + region_tag_name(before) +
               " -> " + region_tag_name(after);
      // fiber invariant preserved
      Scalar n = n_value(se.matrix);
      if (se.matrix.a1 * se.matrix.b1 * se.d1 != n || se.matrix.a2 * se.matrix.b2 * se.d2 != n)
        return "star output violates the fiber invariant at sample " + std::to_string(k);
    }
    return "";
  });
}

Check ff_group_homomorphism(int samples, std::uint64_t seed) {
  return make_check("ff_group_homomorphism", samples, [=]() -> std::string {
    Rng rng(seed);
    for (int k = 0; k < samples; ++k) {
      auto draw = [&rng]() {
        while (true) {
          Scalar g11 = rng.nonzero_scalar(), g12 = rng.nonzero_scalar();
          Scalar g21 = rng.nonzero_scalar(), g22 = rng.nonzero_scalar();
          if ((g11 * g22 - g12 * g21).is_zero()) continue;
          return ff_element(g11, g12, g21, g22, rng.nonzero_scalar());
        }
      };
      FfElement a = draw(), b = draw();
      SixVertexMatrix w = solve_w(ff_embed(a), ff_embed(b));
      if (w != ff_embed(ff_compose(a, b)))
        return "solve_w disagrees with the group law at sample " + std::to_string(k);
      if (!(ff_from_matrix(ff_embed(a)) == a))
        return "embed round-trip failure at sample " + std::to_string(k);
      if (!(ff_compose(a, ff_inverse(a)) == ff_identity()))
        return "group inverse failure at sample " + std::to_string(k);
    }
    return "";
  });
}

Check five_vertex_groupoid(int samples, std::uint64_t seed) {
  return make_check("five_vertex_groupoid", samples, [=]() -> std::string {
    // worked composition
    FvElement u5 = fv_lift(six_vertex(2, 3, 1, 0, 1, 2));
    FvElement v5 = fv_lift(six_vertex(1, 1, 1, 0, 1, -1));
    if (u5.eps != Scalar(2) || v5.eps != Scalar(2)) return "worked lift labels wrong";
    FvElement w5 = fv_compose(u5, v5);
    if (!(w5 == fv_element(six_vertex(2, 3, 2, 0, 1, -2), 2)))
      return "worked five-vertex composition mismatch: " + to_string(w5);
    if (!yb_commutator(u5.matrix, w5.matrix, v5.matrix).is_zero())
      return "worked five-vertex composition fails the Yang-Baxter equation";

    Rng rng(seed);
    auto random_phi = [&rng]() {
      while (true) {
        Scalar a1 = rng.nonzero_scalar(), a2 = rng.nonzero_scalar();
        Scalar b1 = rng.nonzero_scalar(), c1 = rng.nonzero_scalar(), c2 = rng.nonzero_scalar();
        SixVertexMatrix m{a1, a2, b1, 0, c1, c2};
        if (!n_value(m).is_zero()) return fv_lift(m);
      }
    };
    // Delta1(e) = eps prescribed: b1 := N/(a1 eps)
    auto with_delta = [&rng](const Scalar& eps) {
      while (true) {
        Scalar a1 = rng.nonzero_scalar(), a2 = rng.nonzero_scalar();
        Scalar c1 = rng.nonzero_scalar(), c2 = rng.nonzero_scalar();
        Scalar n = a1 * a2 - c1 * c2;
        if (n.is_zero()) continue;
        return fv_lift(six_vertex(a1, a2, n / (a1 * eps), 0, c1, c2));
      }
    };
    auto with_delta_star = [&rng](const Scalar& d) {
      while (true) {
        Scalar a1 = rng.nonzero_scalar(), a2 = rng.nonzero_scalar();
        Scalar c1 = rng.nonzero_scalar(), c2 = rng.nonzero_scalar();
        Scalar n = a1 * a2 - c1 * c2;
        if (n.is_zero()) continue;
        return fv_lift(six_vertex(a1, a2, n / (a2 * d), 0, c1, c2));
      }
    };
    auto random_boundary = [&rng](const Scalar& eps) {
      Scalar a1 = rng.nonzero_scalar(), a2 = rng.nonzero_scalar(), c1 = rng.nonzero_scalar();
      return fv_boundary(six_vertex(a1, a2, 0, 0, c1, a1 * a2 / c1), eps);
    };

    for (int k = 0; k < samples; ++k) {
      FvElement v = k % 3 == 2 ? random_boundary(rng.nonzero_scalar()) : random_phi();
      FvElement u = k % 3 == 1 ? random_boundary(fv_delta_star(v)) : with_delta(fv_delta_star(v));
      FvElement t = with_delta_star(fv_delta(v));

      FvElement s1 = fv_compose(u, v);
      FvElement s2 = fv_compose(v, t);
      if (!(fv_compose(s1, t) == fv_compose(u, s2)))
        return "five-vertex associativity fails at sample " + std::to_string(k);
      // label transport
      if (fv_delta(s1) != fv_delta(v) || fv_delta_star(s1) != fv_delta_star(u))
        return "five-vertex label transport fails at sample " + std::to_string(k);
      // alternative b1(w) expression
      Scalar alt = u.matrix.a2 * v.matrix.b1 +
                   u.matrix.b1 * (v.matrix.c1 * v.matrix.c2 / v.matrix.a2);
      if (alt != s1.matrix.b1)
        return "alternative b1(w) expression disagrees at sample " + std::to_string(k);
      if (!yb_commutator(u.matrix, s1.matrix, v.matrix).is_zero())
        return "five-vertex composition fails the Yang-Baxter equation at sample " +
               std::to_string(k);
      // star involution and inverse laws
      if (!(fv_star(fv_star(u)) == u) || !(fv_inverse(fv_inverse(u)) == u))
        return "five-vertex star/inverse not involutive at sample " + std::to_string(k);
      FvElement idm = fv_compose(u, fv_inverse(u));
      if (!(idm == fv_boundary(identity_vertex(), fv_delta_star(u))))
        return "five-vertex inverse law fails at sample " + std::to_string(k);
    }
    return "";
  });
}

Check lattice_solvable_models(std::uint64_t seed) {
  return make_check("lattice_solvable_models", 0, [=]() -> std::string {
    Rng rng(seed);
    // seeded 3x4 model
    ObjectLabel d = random_label(rng);
    std::vector<GroupoidElement> phi, psi;
    for (int i = 0; i < 3; ++i) phi.emplace_back(sample_fiber(d, FiberSide::Source, rng));
    for (int j = 0; j < 4; ++j) psi.emplace_back(sample_fiber(d, FiberSide::Target, rng));
    LatticeModel m = build_model(ObjectLabel(d), phi, psi);
    Report rep = check_solvability(m);
    if (!rep.all_pass()) {
      for (const auto& c : rep.checks)
        if (!c.pass) return "3x4 solvability check failed: " + c.name + " " + c.witness;
    }

    // a perturbed grid must fail with a located witness; shift the label so
    // the damage cannot collide with the column's value
    LatticeModel broken = m;
    ObjectLabel g22 = nf_delta(std::get<NfElement>(broken.gamma[1][1]));
    Scalar shifted = g22.d1 == Scalar(-1) ? Scalar(1) : g22.d1 + Scalar(1);
    broken.gamma[1][1] = GroupoidElement(idempotent(object_label(shifted, g22.d2)));
    if (check_solvability(broken).all_pass()) return "perturbed grid not detected";

    // partition functions: enumeration vs transfer on random small models
    for (int k = 0; k < 10; ++k) {
      int rows = static_cast<int>(rng.uniform(1, 3)), cols = static_cast<int>(rng.uniform(1, 3));
      ObjectLabel dk = random_label(rng);
      std::vector<GroupoidElement> p, q;
      for (int i = 0; i < rows; ++i) p.emplace_back(sample_fiber(dk, FiberSide::Source, rng));
      for (int j = 0; j < cols; ++j) q.emplace_back(sample_fiber(dk, FiberSide::Target, rng));
      LatticeModel mk = build_model(ObjectLabel(dk), p, q);
      BoundaryAssignment bc;
      bc.mode = k % 2 == 0 ? HorizontalMode::Periodic : HorizontalMode::Fixed;
      for (int i = 0; i < rows; ++i) {
        bc.west.push_back(rng.bit());
        bc.east.push_back(rng.bit());
      }
      for (int j = 0; j < cols; ++j) {
        bc.south.push_back(rng.bit());
        bc.north.push_back(rng.bit());
      }
      if (!(partition_enumerate(mk, bc) == partition_transfer(mk, bc)))
        return "enumeration vs transfer mismatch on random model " + std::to_string(k);
    }

    // transfer matrix commutation whenever pi(rho) is invertible, n <= 4
    int invertible_pairs = 0;
    for (int n = 2; n <= 4; ++n) {
      ObjectLabel dn = random_label(rng);
      std::vector<GroupoidElement> p, q;
      for (int i = 0; i < 3; ++i) p.emplace_back(sample_fiber(dn, FiberSide::Source, rng));
      for (int j = 0; j < n; ++j) q.emplace_back(sample_fiber(dn, FiberSide::Target, rng));
      LatticeModel mn = build_model(ObjectLabel(dn), p, q);
      for (const CommuteCheck& c : transfer_commutation(mn)) {
        if (c.rho_invertible) {
          ++invertible_pairs;
          if (!c.commute)
            return "transfer matrices fail to commute at invertible rho, n = " +
                   std::to_string(n) + " rows " + std::to_string(c.row);
        }
      }
    }
    if (invertible_pairs == 0) return "no invertible rho pairs sampled";

    // swapping two rows of a solvable model leaves the periodic Z unchanged
    {
      ObjectLabel dk = random_label(rng);
      std::vector<GroupoidElement> p, q;
      for (int i = 0; i < 3; ++i) p.emplace_back(sample_fiber(dk, FiberSide::Source, rng));
      for (int j = 0; j < 2; ++j) q.emplace_back(sample_fiber(dk, FiberSide::Target, rng));
      LatticeModel mk = build_model(ObjectLabel(dk), p, q);
      std::swap(p[0], p[1]);
      LatticeModel swapped = build_model(ObjectLabel(dk), p, q);
      BoundaryAssignment bc;
      bc.mode = HorizontalMode::Periodic;
      bc.south = {rng.bit(), rng.bit()};
      bc.north = {rng.bit(), rng.bit()};
      if (!(partition_transfer(mk, bc) == partition_transfer(swapped, bc)))
        return "row swap changed the periodic partition function";
    }
    return "";
  });
}

Check lattice_generality(std::uint64_t seed) {
  return make_check("lattice_generality", 0, [=]() -> std::string {
    Rng rng(seed);
    ObjectLabel d = object_label(2, 3);
    for (int attempt = 0; attempt < 64; ++attempt) {
      NfElement p1 = sample_fiber(d, FiberSide::Source, rng);
      NfElement p2 = sample_fiber(d, FiberSide::Source, rng);
      NfElement q1 = sample_fiber(d, FiberSide::Target, rng);
      NfElement q2 = sample_fiber(d, FiberSide::Target, rng);
      if (nf_delta_star(p1) == nf_delta_star(p2) || nf_delta(q1) == nf_delta(q2)) continue;
      LatticeModel m = build_model(Label(d), {p1, p2}, {q1, q2});
      if (delta(m.gamma[0][0]) == delta(m.gamma[0][1]))
        return "Delta(gamma_11) unexpectedly equals Delta(gamma_12)";
      if (delta_star(m.gamma[0][0]) == delta_star(m.gamma[1][0]))
        return "Delta(gamma_11') unexpectedly equals Delta(gamma_21')";
      if (!check_solvability(m).all_pass())
        return "mixed-object model fails the solvability checks";
      return "";
    }
    return "could not find label-separated fiber points";
  });
}

Check star_delta_invariants(int samples, std::uint64_t seed) {
  return make_check("star_delta_invariants", samples, [=]() -> std::string {
    Rng rng(seed);
    for (int k = 0; k < samples; ++k) {
      // random element of S with nonzero a-weights
      SixVertexMatrix u = six_vertex(rng.nonzero_scalar(), rng.nonzero_scalar(),
                                     Scalar(Rational(rng.uniform(-9, 9), 1)),
                                     Scalar(Rational(rng.uniform(-9, 9), 1)),
                                     rng.nonzero_scalar(), rng.nonzero_scalar());
      SixVertexMatrix s = star(u);
      // N(u*) a1 a2 = -det(B) N(u)
      if (n_value(s) * u.a1 * u.a2 != -(det_mid(u) * n_value(u)))
        return "star N identity fails for " + to_string(u);
      if (!det_mid(u).is_zero() && !s.a1.is_zero() && !s.a2.is_zero()) {
        if (star(s) != u) return "double star differs for " + to_string(u);
      }
      if (!u.b1.is_zero() && !u.b2.is_zero() && !n_value(u).is_zero()) {
        Scalar lambda = rng.nonzero_scalar();
        if (delta_pair(scale(u, lambda)) != delta_pair(u))
          return "Delta not scale invariant for " + to_string(u);
      }
    }
    return "";
  });
}

Check boundary_solution_regions(int samples, std::uint64_t seed) {
  return make_check("boundary_solution_regions", samples, [=]() -> std::string {
    Rng rng(seed);
    int done = 0, guard = 0;
    while (done < samples && ++guard < samples * 80) {
      ObjectLabel d = random_label(rng);
      NfElement u = sample_interior(d, FiberSide::Source, rng);
      // engineer w on the Omega_b or Omega_a stratum with Delta(w*) = Delta(u*)
      bool want_b = done % 2 == 0;
      NfElement w = make_with_delta_star(nf_delta_star(u),
                                         want_b ? Stratum::GammaB : Stratum::GammaA, rng);
      NfElement v = compose(nf_inverse(u), w);
      if (classify(v.matrix).tag != RegionTag::OmegaCirc) continue;
      SixVertexMatrix ws = solve_w(u.matrix, v.matrix);
      if (!n_value(ws).is_zero()) return "expected a free-fermionic solution";
      RegionTag tag = classify(ws).tag;
      if (tag != RegionTag::OmegaLowB && tag != RegionTag::OmegaLowA)
        return std::string("N = 0 solution landed in ") + region_tag_name(tag);
      if (ws != w.matrix) return "engineered boundary matrix mismatch";
      ++done;
    }
    if (done < samples) return "could not engineer enough boundary solutions";
    // closure: solve_w output of interior pairs stays in Omega-bar
    for (int k = 0; k < samples; ++k) {
      ObjectLabel d = random_label(rng);
      NfElement u = sample_interior(d, FiberSide::Source, rng);
      NfElement v = sample_interior(d, FiberSide::Target, rng);
      if (classify(solve_w(u.matrix, v.matrix)).tag == RegionTag::Outside)
        return "solution left Omega-bar";
    }
    return "";
  });
}

Check ff_family_properties(int samples, std::uint64_t seed) {
  return make_check("ff_family_properties", samples, [=]() -> std::string {
    Rng rng(seed);
    for (int k = 0; k < samples; ++k) {
      Scalar q1 = rng.nonzero_scalar(), q2 = rng.nonzero_scalar();
      while (q2 == q1) q2 = rng.nonzero_scalar();
      Scalar z1 = rng.nonzero_scalar(), z2 = rng.nonzero_scalar(), w = rng.nonzero_scalar();
      SixVertexMatrix u = weights_ff(q1, q2, z1, z2, w);
      if (!n_value(u).is_zero()) return "R_ff output not free-fermionic";
      if (!u.a1.is_zero() && !u.a2.is_zero()) {
        SixVertexMatrix s = star(u);
        if (s.a1 != u.a2 || s.a2 != u.a1) return "free-fermionic star does not swap a-weights";
      }
      SixVertexMatrix c = weights_cf(q1, q2, z1, z2, w);
      if (c.a1 != c.a2) return "R_cf output not field-free";
    }
    return "";
  });
}

SuiteReport run_suite(const std::string& suite, int samples, std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = suite;
  rep.samples = samples;
  rep.seed = seed;
  int n = samples;
  bool all = suite == "all";

  if (all || suite == "core") {
    rep.checks.push_back(worked_solution());
    rep.checks.push_back(solver_oracle_agreement(n, seed));
    rep.checks.push_back(six_commutator_variants(n, seed + 1));
    rep.checks.push_back(solution_weight_identities(n, seed + 2));
    rep.checks.push_back(star_delta_invariants(n, seed + 3));
    rep.checks.push_back(boundary_solution_regions(std::max(1, n / 10), seed + 4));
  }
  if (all || suite == "ff") {
    rep.checks.push_back(cf_parametrized_ybe(n, seed + 5));
    rep.checks.push_back(ff_parametrized_ybe(n, seed + 6));
    rep.checks.push_back(ff_group_homomorphism(n, seed + 7));
    rep.checks.push_back(ff_family_properties(n, seed + 8));
  }
  if (all || suite == "nf") {
    auto [axioms, transport] = nf_axioms_and_transport(n, seed + 9);
    rep.checks.push_back(axioms);
    rep.checks.push_back(transport);
    rep.checks.push_back(nf_star_structure(n, seed + 10));
  }
  if (all || suite == "fv") {
    rep.checks.push_back(five_vertex_groupoid(n, seed + 11));
  }
  if (all || suite == "lattice") {
    rep.checks.push_back(lattice_solvable_models(seed + 12));
    rep.checks.push_back(lattice_generality(seed + 13));
  }
  if (rep.checks.empty()) fail(Errc::ParseError, "unknown suite '" + suite + "'");
  return rep;
}

json to_json(const SuiteReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json entry{{"name", c.name}, {"pass", c.pass}};
    if (c.samples > 0) entry["samples"] = c.samples;
    if (!c.witness.empty()) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  return json{{"suite", r.suite},
              {"samples", r.samples},
              {"seed", r.seed},
              {"checks", std::move(checks)},
              {"all_pass", r.all_pass()}};
}

}  // namespace ybg::verify
