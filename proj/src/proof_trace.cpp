#include <algorithm>
#include <cstdint>

#include "kakeya/parallel.hpp"
#include "kakeya/polymethod.hpp"

namespace kakeya {

namespace {

// Solved-g payload injected by verify_trace so a stored trace re-derives
// everything except the nullspace solve itself.
struct PresetG {
  const std::vector<std::vector<int>>* monos = nullptr;
  const std::vector<std::vector<std::string>>* g_digits = nullptr;
  const std::vector<int>* g_kb = nullptr;
  int vmin = 0, kb_min = 0;
  int precision_raises = 0;
};

std::string ext_poly_text(const ExtField& L, const std::vector<ExtElem>& h) {
  std::string s;
  for (size_t i = 0; i < h.size(); ++i) {
    if (L.is_zero(h[i])) continue;
    if (!s.empty()) s += " + ";
    s += "(" + L.to_string(h[i]) + ")";
    if (i == 1) s += "*X";
    if (i > 1) s += "*X^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

std::string tuple_text(const ExtField& L, const std::vector<ExtElem>& c) {
  std::string s = "(";
  for (size_t j = 0; j < c.size(); ++j) {
    if (j) s += ", ";
    s += L.to_string(c[j]);
  }
  return s + ")";
}

// D = d_used * k * n * q^{k(n-1)+1}, the degree-calibrated count bound
// scaled free of the dyadic denominators.
BigU chain_middle(int d_used, int k, int n, int q) {
  BigU p = big_from_u128((unsigned __int128)uint64_t(d_used < 0 ? 0 : d_used));
  p.mul_small(uint64_t(k));
  p.mul_small(uint64_t(n));
  for (int i = 0; i < k * (n - 1) + 1; ++i) p.mul_small(uint64_t(q));
  return p;
}

// First failed check in derivation order decides the attribution; the
// verdict separates broken assertions (violation) from a chain that simply
// does not close (consistent).
void finalize(ProofTrace& tr) {
  tr.failed_step.clear();
  bool assertion_failed = false;
  auto fail = [&](const std::string& label, bool assertion) {
    if (tr.failed_step.empty()) tr.failed_step = label;
    if (assertion) assertion_failed = true;
  };
  if (!tr.vanish_ok) fail("step3:vanish", true);
  for (const auto& d : tr.dirs) {
    const std::string tag = " dir=" + std::to_string(d.dir);
    if (!d.hits_ok) fail("step4a" + tag, true);
    if (!d.v_threshold_ok) fail("step4b" + tag, true);
    if (!d.v_hits_ok) fail("step4c" + tag, true);
    if (!d.roots_ok) fail("step4:roots" + tag, true);
    if (!d.resid_match) fail("step4:residue" + tag, true);
  }
  if (!tr.sz_ran) {
    fail("step5:alpha-range", false);
  } else if (!tr.sz.pass) {
    fail("step5:sz", true);
  }
  if (!tr.chain_i) fail("step5:chain-i", false);
  if (!tr.chain_ii) fail("step5:chain-ii", false);
  if (!tr.chain_iii) fail("step5:chain-iii", false);

  if (tr.failed_step.empty()) {
    tr.verdict = "contradiction";
    tr.terminated_at = 0;
  } else {
    tr.verdict = assertion_failed ? "violation" : "consistent";
    if (tr.failed_step.rfind("step3", 0) == 0) tr.terminated_at = 3;
    else if (tr.failed_step.rfind("step4", 0) == 0) tr.terminated_at = 4;
    else tr.terminated_at = 5;
  }
}

ProofTrace run_trace(const RSpace& V, const std::vector<uint64_t>& E,
                     double eps, double nu, const TraceOptions& opt,
                     const PresetG* preset) {
  const RRing& R = V.ring();
  const Fq& F = R.field();
  const int q = R.q(), k = R.k(), n = V.n();

  ProofTrace tr;
  tr.q = q;
  tr.k = k;
  tr.n = n;
  tr.eps = eps;
  tr.nu = nu;
  tr.full_mode = opt.full;
  tr.claimed = !opt.claimed_dirs.empty();

  tr.points = E;
  std::sort(tr.points.begin(), tr.points.end());
  tr.points.erase(std::unique(tr.points.begin(), tr.points.end()), tr.points.end());
  for (uint64_t p : tr.points)
    if (p >= V.size()) throw DomainError("proof_trace: point code out of range");
  tr.size = tr.points.size();

  tr.beta = covering_beta(eps, nu, k, n, q);
  tr.bound = covering_bound(eps, nu, k, n, q);
  tr.line_threshold = ceil_scaled(eps, R.size());
  tr.required_omega = ceil_scaled(nu, V.size());

  // witnessing lines per direction, at their best anchors
  KakeyaProfile prof = profile(V, tr.points, opt.jobs);
  std::vector<uint64_t> omega_dirs;
  std::vector<uint64_t> omega_anchors;
  if (tr.claimed) {
    omega_dirs = opt.claimed_dirs;
    std::sort(omega_dirs.begin(), omega_dirs.end());
    omega_dirs.erase(std::unique(omega_dirs.begin(), omega_dirs.end()), omega_dirs.end());
    for (uint64_t w : omega_dirs) {
      if (w >= V.size() || !V.primitive(w))
        throw DomainError("proof_trace: claimed direction not primitive");
      size_t at = size_t(std::lower_bound(prof.dirs.begin(), prof.dirs.end(), w) - prof.dirs.begin());
      omega_anchors.push_back(prof.best_anchor[at]);
    }
  } else {
    for (size_t i = 0; i < prof.dirs.size(); ++i) {
      if (prof.best[i] >= int(tr.line_threshold)) {
        omega_dirs.push_back(prof.dirs[i]);
        omega_anchors.push_back(prof.best_anchor[i]);
      }
    }
  }
  tr.omega = omega_dirs.size();
  tr.hypothesis_met = tr.omega >= tr.required_omega;
  tr.chain_i = tr.hypothesis_met;

  const bool proceed = opt.full || tr.claimed ||
                       (tr.size < tr.bound && tr.hypothesis_met);
  if (!proceed) {
    tr.stopped_early = true;
    tr.terminated_at = 1;
    tr.verdict = "consistent";
    return tr;
  }

  // degree of the solve: the calibrated beta while the set is undersized,
  // otherwise the least degree with more monomials than points
  if (tr.size < tr.bound) {
    tr.d_used = int(tr.beta);
  } else {
    int d = 0;
    while (binom(d + n, n) <= tr.size) {
      ++d;
      if (binom(d + n, n) > 100000) throw ResourceError("proof_trace: degree search out of budget");
    }
    tr.d_used = d;
  }

  // steps (2)-(3): torsion images and the vanishing solve over L_N, with
  // one automatic precision raise
  int N = opt.N_override > 0 ? opt.N_override : k + 2;
  ExtVanish ev;
  std::vector<std::vector<ExtElem>> S;
  ExtField L(F, k, N);
  for (int attempt = 0;; ++attempt) {
    try {
      std::vector<ExtElem> orbit = L.orbit_table();
      S.clear();
      S.reserve(tr.points.size());
      for (uint64_t p : tr.points) {
        std::vector<ExtElem> pt(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) pt[size_t(j)] = orbit[V.coord(p, j)];
        S.push_back(std::move(pt));
      }
      std::sort(S.begin(), S.end());
      S.erase(std::unique(S.begin(), S.end()), S.end());

      if (preset) {
        tr.precision_raises = preset->precision_raises;
        ev.monos = *preset->monos;
        ev.kb = *preset->g_kb;
        ev.vmin = preset->vmin;
        ev.kb_min = preset->kb_min;
        ev.coef.clear();
        for (const auto& rows : *preset->g_digits) ev.coef.push_back(L.from_digit_strings(rows));
        break;
      }
      ExtOps eops(L);
      ev = vanishing_polynomial_ext(eops, S, n, tr.d_used);
      break;
    } catch (const PrecisionError& e) {
      if (preset || attempt >= 1 || opt.N_override > 0)
        throw PrecisionError("proof_trace step (3) at N=" + std::to_string(N) + ": " + e.what());
      N += k + 2;
      ++tr.precision_raises;
      L = ExtField(F, k, N);
    }
  }
  tr.N_used = N;
  ExtOps eops(L);
  FqOps fops(F);

  tr.monos = ev.monos;
  tr.g_kb = ev.kb;
  tr.vmin = ev.vmin;
  tr.kb_min = ev.kb_min;
  tr.g_digits.clear();
  for (const auto& c : ev.coef) tr.g_digits.push_back(L.to_digit_strings(c));

  MultiPoly<ExtOps> g = ev.poly(eops, n);
  tr.g_text = g.to_string();

  tr.vanish_ok = true;
  for (const auto& pt : S) {
    if (L.v_L_stored(g.eval(pt)) < ev.kb_min) {
      tr.vanish_ok = false;
      break;
    }
  }

  MultiPoly<FqOps> gbar = residue_reduce(fops, g);
  if (gbar.is_zero())
    throw PrecisionError("proof_trace step (3): residue reduction vanished");
  tr.gbar.clear();
  for (const auto& [e, c] : gbar.terms()) tr.gbar.emplace_back(e, int(c.v));
  tr.gbar_text = gbar.to_string();

  // step (4), parallel over directions: each claimed direction is checked
  // at its best witnessing line
  BOps bops(F);
  MultiPoly<BOps> gbarB(bops, n);
  for (const auto& [e, c] : gbar.terms())
    gbarB.add_term(e, FqPoly::constant(F, c));
  const LubinTate& lt = L.lt();
  std::vector<ExtElem> orbit = L.orbit_table();

  tr.dirs.assign(omega_dirs.size(), TraceDirection{});
  parallel_for(int64_t(omega_dirs.size()), opt.jobs, [&](int64_t i) {
    TraceDirection& td = tr.dirs[size_t(i)];
    td.dir = omega_dirs[size_t(i)];
    td.anchor = omega_anchors[size_t(i)];
    for (uint32_t a = 0; a < R.size(); ++a) {
      uint64_t pt = V.axpy(td.anchor, RElem(a), td.dir);
      if (std::binary_search(tr.points.begin(), tr.points.end(), pt)) td.hits.push_back(a);
    }
    td.hits_ok = td.hits.size() >= tr.line_threshold;

    std::vector<ExtElem> c(static_cast<size_t>(n));
    std::vector<XtPoly> P;
    std::vector<FqPoly> sargs;
    P.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      c[size_t(j)] = orbit[V.coord(td.anchor, j)];
      P.push_back(lt.bracket_poly(R.digits(V.coord(td.dir, j))));
      sargs.push_back(lt.s_map(R.digits(V.coord(td.dir, j))));
    }
    std::vector<ExtElem> h = compose_line(g, c, P);
    td.c_text = tuple_text(L, c);
    td.h_text = ext_poly_text(L, h);

    FqPoly hbar = gbarB.eval(sargs);
    td.hbar_text = hbar.to_string("X");
    td.resid_match = residue_poly(L, h) == hbar;
    td.v_resid = hbar.is_zero() ? val_inf : hbar.valuation();
    td.v_threshold_ok = uint64_t(td.v_resid) >= tr.line_threshold || val_is_inf(td.v_resid);
    td.v_hits_ok = td.v_resid >= int(td.hits.size()) || val_is_inf(td.v_resid);

    td.roots_ok = true;
    for (uint32_t a : td.hits) {
      ExtElem at = eval_ext_poly(L, h, orbit[a]);
      if (L.v_L_stored(at) < ev.kb_min) {
        td.roots_ok = false;
        break;
      }
    }
  });
  tr.step4_ok = true;
  for (const auto& d : tr.dirs)
    if (!d.ok()) tr.step4_ok = false;

  // step (5): the counting lemma on the residue, then the exact chain
  try {
    tr.sz = sz_verify(gbarB, eps / n, k, opt.jobs);
    tr.sz_ran = true;
  } catch (const DomainError&) {
    tr.sz_ran = false;  // degree outside the counting range; chain cannot close
  }

  DyadicRational de = to_dyadic(eps, "eps"), dn = to_dyadic(nu, "nu");
  BigU mid = chain_middle(tr.d_used, k, n, q);
  {
    BigU lhs = big_from_u128((unsigned __int128)tr.omega * de.num);
    BigU rhs = mid;
    rhs.shl(de.exp2);
    tr.chain_ii = lhs.cmp(rhs) < 0;
    tr.chain_ii_lhs = lhs.to_string();
    tr.chain_ii_rhs = rhs.to_string();
  }
  {
    BigU lhs = mid;
    lhs.shl(de.exp2 + dn.exp2);
    BigU rhs = big_from_u128((unsigned __int128)de.num * dn.num);
    for (int i = 0; i < k * n; ++i) rhs.mul_small(uint64_t(q));
    tr.chain_iii = lhs.cmp(rhs) <= 0;
    tr.chain_iii_lhs = lhs.to_string();
    tr.chain_iii_rhs = rhs.to_string();
  }

  finalize(tr);
  return tr;
}

}  // namespace

ProofTrace proof_trace(const RSpace& V, const std::vector<uint64_t>& E,
                       double eps, double nu, const TraceOptions& opt) {
  return run_trace(V, E, eps, nu, opt, nullptr);
}

ReplayReport verify_trace(const ProofTrace& tr) {
  ReplayReport rep;
  auto note = [&](const std::string& s) {
    rep.ok = false;
    rep.notes.push_back(s);
  };
  ProofTrace shadow;
  try {
    Fq F(tr.q);
    RRing R(F, tr.k);
    RSpace V(R, tr.n);
    TraceOptions opt;
    opt.full = tr.full_mode;
    opt.jobs = 1;
    if (tr.claimed)
      for (const auto& d : tr.dirs) opt.claimed_dirs.push_back(d.dir);
    PresetG preset;
    preset.monos = &tr.monos;
    preset.g_digits = &tr.g_digits;
    preset.g_kb = &tr.g_kb;
    preset.vmin = tr.vmin;
    preset.kb_min = tr.kb_min;
    preset.precision_raises = tr.precision_raises;
    if (!tr.stopped_early) {
      if (tr.monos.size() != tr.g_digits.size() || tr.monos.size() != tr.g_kb.size())
        throw DomainError("verify_trace: ragged solved-g record");
      opt.N_override = tr.N_used;
    }
    shadow = run_trace(V, tr.points, tr.eps, tr.nu, opt, &preset);
  } catch (const Error& e) {
    note(std::string("re-derivation failed: ") + e.what());
    return rep;
  }

  auto cmp_u = [&](const char* what, uint64_t a, uint64_t b) {
    if (a != b)
      note(std::string(what) + ": stored " + std::to_string(a) + ", re-derived " + std::to_string(b));
  };
  auto cmp_i = [&](const char* what, long long a, long long b) {
    if (a != b)
      note(std::string(what) + ": stored " + std::to_string(a) + ", re-derived " + std::to_string(b));
  };
  auto cmp_b = [&](const char* what, bool a, bool b) {
    if (a != b)
      note(std::string(what) + ": stored " + (a ? "true" : "false") + ", re-derived " + (b ? "true" : "false"));
  };
  auto cmp_s = [&](const char* what, const std::string& a, const std::string& b) {
    if (a != b) note(std::string(what) + ": stored \"" + a + "\", re-derived \"" + b + "\"");
  };

  cmp_u("size", tr.size, shadow.size);
  cmp_u("bound", tr.bound, shadow.bound);
  cmp_i("beta", tr.beta, shadow.beta);
  cmp_u("line_threshold", tr.line_threshold, shadow.line_threshold);
  cmp_u("required_omega", tr.required_omega, shadow.required_omega);
  cmp_u("omega", tr.omega, shadow.omega);
  cmp_b("hypothesis_met", tr.hypothesis_met, shadow.hypothesis_met);
  cmp_b("stopped_early", tr.stopped_early, shadow.stopped_early);
  cmp_i("terminated_at", tr.terminated_at, shadow.terminated_at);
  cmp_s("verdict", tr.verdict, shadow.verdict);
  cmp_s("failed_step", tr.failed_step, shadow.failed_step);
  if (tr.stopped_early && shadow.stopped_early) return rep;

  cmp_i("N_used", tr.N_used, shadow.N_used);
  cmp_i("d_used", tr.d_used, shadow.d_used);
  cmp_i("vmin", tr.vmin, shadow.vmin);
  cmp_i("kb_min", tr.kb_min, shadow.kb_min);
  cmp_b("vanish_ok", tr.vanish_ok, shadow.vanish_ok);
  cmp_s("g_text", tr.g_text, shadow.g_text);
  cmp_s("gbar_text", tr.gbar_text, shadow.gbar_text);
  if (tr.gbar != shadow.gbar) note("gbar: stored coefficients differ from re-derived");
  if (tr.monos != shadow.monos) note("monos: stored basis differs from re-derived");
  if (tr.g_digits != shadow.g_digits) note("g: stored digits differ from re-derived");

  if (tr.dirs.size() != shadow.dirs.size()) {
    note("dirs: stored " + std::to_string(tr.dirs.size()) + " directions, re-derived " + std::to_string(shadow.dirs.size()));
  } else {
    for (size_t i = 0; i < tr.dirs.size(); ++i) {
      const auto& a = tr.dirs[i];
      const auto& b = shadow.dirs[i];
      const std::string tag = "dir " + std::to_string(a.dir);
      cmp_u((tag + " code").c_str(), a.dir, b.dir);
      cmp_u((tag + " anchor").c_str(), a.anchor, b.anchor);
      if (a.hits != b.hits) note(tag + " hits: stored set differs from re-derived");
      cmp_b((tag + " hits_ok").c_str(), a.hits_ok, b.hits_ok);
      cmp_s((tag + " c").c_str(), a.c_text, b.c_text);
      cmp_s((tag + " h").c_str(), a.h_text, b.h_text);
      cmp_s((tag + " hbar").c_str(), a.hbar_text, b.hbar_text);
      cmp_i((tag + " v_resid").c_str(), a.v_resid, b.v_resid);
      cmp_b((tag + " v_threshold_ok").c_str(), a.v_threshold_ok, b.v_threshold_ok);
      cmp_b((tag + " v_hits_ok").c_str(), a.v_hits_ok, b.v_hits_ok);
      cmp_b((tag + " roots_ok").c_str(), a.roots_ok, b.roots_ok);
      cmp_b((tag + " resid_match").c_str(), a.resid_match, b.resid_match);
    }
  }
  cmp_b("step4_ok", tr.step4_ok, shadow.step4_ok);

  cmp_b("sz_ran", tr.sz_ran, shadow.sz_ran);
  if (tr.sz_ran && shadow.sz_ran) {
    if (tr.sz.alpha != shadow.sz.alpha) note("sz alpha: stored tuple differs from re-derived");
    cmp_i("sz alpha_sum", tr.sz.alpha_sum, shadow.sz.alpha_sum);
    cmp_i("sz lead_val", tr.sz.lead_val, shadow.sz.lead_val);
    cmp_i("sz threshold", tr.sz.threshold, shadow.sz.threshold);
    cmp_u("sz count", tr.sz.count, shadow.sz.count);
    cmp_u("sz bound", tr.sz.bound, shadow.sz.bound);
    cmp_b("sz pass", tr.sz.pass, shadow.sz.pass);
  }
  cmp_b("chain_i", tr.chain_i, shadow.chain_i);
  cmp_b("chain_ii", tr.chain_ii, shadow.chain_ii);
  cmp_b("chain_iii", tr.chain_iii, shadow.chain_iii);
  cmp_s("chain_ii_lhs", tr.chain_ii_lhs, shadow.chain_ii_lhs);
  cmp_s("chain_ii_rhs", tr.chain_ii_rhs, shadow.chain_ii_rhs);
  cmp_s("chain_iii_lhs", tr.chain_iii_lhs, shadow.chain_iii_lhs);
  cmp_s("chain_iii_rhs", tr.chain_iii_rhs, shadow.chain_iii_rhs);
  return rep;
}

}  // namespace kakeya
