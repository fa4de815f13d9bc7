// Copyright 2025-2026 The qcpaul developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcpaul/rewrite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "qcpaul/rng.hpp"

namespace qcpaul {

namespace {

constexpr double kMatchTol = 1e-9;

const GateElement* as_gate(const CircuitElement& e) {
  return std::get_if<GateElement>(&e);
}

const ProjectorElement* as_proj(const CircuitElement& e) {
  return std::get_if<ProjectorElement>(&e);
}

bool mat_is(const ComplexMatrix& m, const ComplexMatrix& ref,
            double tol = kMatchTol) {
  if (m.rows() != ref.rows() || m.cols() != ref.cols()) return false;
  return max_abs_diff(m, ref) <= tol;
}

// Plain CNOT: X payload, one dot control. Returns (control, target).
std::optional<std::pair<std::string, std::string>> as_cnot(
    const CircuitElement& e) {
  const GateElement* g = as_gate(e);
  if (!g || g->targets.size() != 1 || g->controls.size() != 1) return {};
  if (g->controls[0].kind != ControlSpec::Kind::N) return {};
  if (!mat_is(g->matrix, pauli(Axis::X))) return {};
  return std::make_pair(g->controls[0].wires[0], g->targets[0]);
}

// Single-target gate with the given Pauli payload and any controls.
const GateElement* as_pauli_gate(const CircuitElement& e, Axis w) {
  const GateElement* g = as_gate(e);
  if (!g || g->targets.size() != 1) return nullptr;
  if (!mat_is(g->matrix, pauli(w))) return nullptr;
  return g;
}

bool controls_equal(const std::vector<ControlSpec>& a,
                    const std::vector<ControlSpec>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].kind != b[i].kind || a[i].wires != b[i].wires) return false;
    if (a[i].kind == ControlSpec::Kind::Projector &&
        !mat_is(a[i].projector, b[i].projector, 1e-12))
      return false;
  }
  return true;
}

std::string join_wires(const WireList& ws) {
  std::string s;
  for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? "," : "") + ws[i];
  return s;
}

// Short deterministic fingerprint of a payload matrix, so re-matching after
// a permutation sees swapped operands as a different binding.
std::string matrix_key(const ComplexMatrix& m) {
  std::string s;
  char buf[64];
  for (const Complex& z : m.entries()) {
    std::snprintf(buf, sizeof(buf), "%.13g,%.13g;", z.real(), z.imag());
    s += buf;
  }
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash_name(s)));
  return buf;
}

std::string controls_key(const std::vector<ControlSpec>& cs) {
  std::string s;
  for (const ControlSpec& c : cs) {
    switch (c.kind) {
      case ControlSpec::Kind::N: s += "n(" + join_wires(c.wires) + ")"; break;
      case ControlSpec::Kind::NBar:
        s += "nbar(" + join_wires(c.wires) + ")";
        break;
      case ControlSpec::Kind::Projector:
        s += "proj(" + join_wires(c.wires) + ")";
        break;
    }
  }
  return s;
}

// Control supports of both lists merged, in wire declaration order.
WireList control_union(const Circuit& c, const std::vector<ControlSpec>& a,
                       const std::vector<ControlSpec>& b) {
  std::set<std::string> used;
  for (const ControlSpec& s : a)
    used.insert(s.wires.begin(), s.wires.end());
  for (const ControlSpec& s : b)
    used.insert(s.wires.begin(), s.wires.end());
  WireList out;
  for (const std::string& w : c.wires)
    if (used.count(w)) out.push_back(w);
  return out;
}

// Product of the control projectors embedded on `on_wires`.
ComplexMatrix control_product(const std::vector<ControlSpec>& cs,
                              const WireList& on_wires) {
  ComplexMatrix p = ComplexMatrix::identity(std::size_t{1} << on_wires.size());
  for (const ControlSpec& c : cs) p = p * embed(c.matrix(), c.wires, on_wires);
  return p;
}

bool controls_commute(const Circuit& c, const std::vector<ControlSpec>& a,
                      const std::vector<ControlSpec>& b) {
  const WireList u = control_union(c, a, b);
  if (u.empty()) return true;
  const ComplexMatrix pa = control_product(a, u);
  const ComplexMatrix pb = control_product(b, u);
  return max_abs_diff(pa * pb, pb * pa) <= kMatchTol;
}

bool wires_disjoint(const WireList& a, const WireList& b) {
  for (const std::string& w : a)
    if (std::find(b.begin(), b.end(), w) != b.end()) return false;
  return true;
}

WireList control_wires(const std::vector<ControlSpec>& cs) {
  WireList out;
  for (const ControlSpec& c : cs)
    out.insert(out.end(), c.wires.begin(), c.wires.end());
  return out;
}

// Rank-1 computational-basis projector |j><j|; returns j.
std::optional<int> as_basis_projector(const ComplexMatrix& m) {
  for (int j = 0; j < 2; ++j) {
    const ComplexMatrix v = j ? ket1() : ket0();
    if (mat_is(m, v * v.dagger(), 1e-12)) return j;
  }
  return {};
}

std::optional<int> as_zz_projector(const ComplexMatrix& m) {
  for (int j = 0; j < 2; ++j)
    if (mat_is(m, pi_pair(Axis::Z, Axis::Z, j), 1e-12)) return j;
  return {};
}

std::optional<int> as_basis_ket(const ComplexMatrix& v) {
  if (mat_is(v, ket0(), 1e-12)) return 0;
  if (mat_is(v, ket1(), 1e-12)) return 1;
  return {};
}

std::optional<int> as_basis_bra(const ComplexMatrix& v) {
  if (mat_is(v, ket0().dagger(), 1e-12)) return 0;
  if (mat_is(v, ket1().dagger(), 1e-12)) return 1;
  return {};
}

int option_bit(const Site& site, const std::string& name) {
  auto it = site.options.find(name);
  if (it == site.options.end()) return 0;
  if (it->second == "0") return 0;
  if (it->second == "1") return 1;
  throw Error("rewrite option '" + name + "' must be 0 or 1");
}

// A wire is live across position `pos` if no ket comes at or after it and
// no bra at or before it; such a wire can host a wake identity's ancilla.
bool wire_live_at(const Circuit& c, const std::string& wire,
                  std::size_t pos) {
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    if (const auto* k = std::get_if<KetPrep>(&c.elements[i]))
      if (k->wire == wire && i >= pos) return false;
    if (const auto* b = std::get_if<BraSelect>(&c.elements[i]))
      if (b->wire == wire && i < pos) return false;
  }
  return true;
}

bool wire_unused(const Circuit& c, const std::string& wire) {
  for (const CircuitElement& e : c.elements) {
    const WireList ws = element_wires(e);
    if (std::find(ws.begin(), ws.end(), wire) != ws.end()) return false;
  }
  return true;
}

std::string pick_free_wire(const Circuit& c, const WireList& exclude) {
  for (const std::string& w : c.wires) {
    if (std::find(exclude.begin(), exclude.end(), w) != exclude.end())
      continue;
    if (wire_unused(c, w)) return w;
  }
  return "";
}

Site make_site(std::size_t start, std::string rule,
               std::map<std::string, std::string> matched,
               std::map<std::string, std::string> options = {}) {
  Site s;
  s.start = start;
  s.rule = std::move(rule);
  s.matched = std::move(matched);
  s.options = std::move(options);
  return s;
}

// --- rule registry ----------------------------------------------------------

std::vector<RewriteRule> build_rules() {
  std::vector<RewriteRule> rules;
  auto add = [&rules](std::string id, std::size_t arity, auto matcher,
                      auto producer) {
    RewriteRule r;
    r.id = std::move(id);
    r.arity = arity;
    r.matcher = std::move(matcher);
    r.producer = std::move(producer);
    rules.push_back(std::move(r));
  };

  // CNOT(b->a) CNOT(c->b), chronological window [CNOT(c->b), CNOT(b->a)].
  auto match_chain = [](const std::string& rule) {
    return [rule](const Circuit& c, std::size_t i) -> std::optional<Site> {
      const auto e0 = as_cnot(c.elements[i]);
      const auto e1 = as_cnot(c.elements[i + 1]);
      if (!e0 || !e1) return {};
      // e0 = (gamma -> beta), e1 = (beta -> alpha)
      if (e0->second != e1->first) return {};
      if (e0->first == e1->second) return {};  // that is the loop case
      return make_site(i, rule,
                       {{"alpha", e1->second},
                        {"beta", e0->second},
                        {"gamma", e0->first}});
    };
  };

  add("wake-chain", 2, match_chain("wake-chain"),
      [](const Circuit& c, const Site& s) {
        std::vector<CircuitElement> out = {c.elements[s.start + 1],
                                           c.elements[s.start]};
        out.emplace_back(
            make_cnot(s.matched.at("gamma"), s.matched.at("alpha")));
        return out;
      });

  add("wake-chain-alt", 2, match_chain("wake-chain-alt"),
      [](const Circuit& c, const Site& s) {
        std::vector<CircuitElement> out;
        out.emplace_back(
            make_cnot(s.matched.at("gamma"), s.matched.at("alpha")));
        out.push_back(c.elements[s.start + 1]);
        out.push_back(c.elements[s.start]);
        return out;
      });

  add("wake-chain-inv", 3,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const auto e0 = as_cnot(c.elements[i]);
        const auto e1 = as_cnot(c.elements[i + 1]);
        const auto e2 = as_cnot(c.elements[i + 2]);
        if (!e0 || !e1 || !e2) return {};
        // [CNOT(beta->alpha), CNOT(gamma->beta), CNOT(gamma->alpha)]
        if (e1->second != e0->first) return {};
        if (e2->first != e1->first || e2->second != e0->second) return {};
        if (e0->first == e2->first) return {};
        return make_site(i, "wake-chain-inv",
                         {{"alpha", e0->second},
                          {"beta", e0->first},
                          {"gamma", e1->first}});
      },
      [](const Circuit& c, const Site& s) {
        return std::vector<CircuitElement>{c.elements[s.start + 1],
                                           c.elements[s.start]};
      });

  add("wake-chain-alt-inv", 3,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const auto e0 = as_cnot(c.elements[i]);
        const auto e1 = as_cnot(c.elements[i + 1]);
        const auto e2 = as_cnot(c.elements[i + 2]);
        if (!e0 || !e1 || !e2) return {};
        // [CNOT(gamma->alpha), CNOT(beta->alpha), CNOT(gamma->beta)]
        if (e0->second != e1->second) return {};
        if (e2->first != e0->first || e2->second != e1->first) return {};
        if (e2->second == e0->second) return {};
        return make_site(i, "wake-chain-alt-inv",
                         {{"alpha", e1->second},
                          {"beta", e1->first},
                          {"gamma", e0->first}});
      },
      [](const Circuit& c, const Site& s) {
        return std::vector<CircuitElement>{c.elements[s.start + 2],
                                           c.elements[s.start + 1]};
      });

  auto match_loop_pair = [](const Circuit& c, std::size_t i)
      -> std::optional<std::pair<std::string, std::string>> {
    const auto e0 = as_cnot(c.elements[i]);
    const auto e1 = as_cnot(c.elements[i + 1]);
    if (!e0 || !e1) return {};
    if (e0->first != e1->second || e0->second != e1->first) return {};
    return std::make_pair(e0->first, e0->second);  // (a, b): e0 = CNOT(a->b)
  };

  add("wake-loop", 2,
      [match_loop_pair](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const auto ab = match_loop_pair(c, i);
        if (!ab) return {};
        return make_site(i, "wake-loop", {{"a", ab->first}, {"b", ab->second}});
      },
      [](const Circuit& c, const Site& s) {
        return std::vector<CircuitElement>{
            c.elements[s.start + 1], c.elements[s.start],
            c.elements[s.start + 1], c.elements[s.start]};
      });

  add("wake-loop-inv", 4,
      [match_loop_pair](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const auto p1 = match_loop_pair(c, i);
        const auto p2 = match_loop_pair(c, i + 2);
        if (!p1 || !p2 || *p1 != *p2) return {};
        return make_site(i, "wake-loop-inv",
                         {{"a", p1->first}, {"b", p1->second}});
      },
      [](const Circuit& c, const Site& s) {
        return std::vector<CircuitElement>{c.elements[s.start + 1],
                                           c.elements[s.start]};
      });

  add("wake-sigz", 2,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const GateElement* z = as_pauli_gate(c.elements[i], Axis::Z);
        const auto cn = as_cnot(c.elements[i + 1]);
        if (!z || !z->controls.empty() || !cn) return {};
        if (z->targets[0] != cn->second) return {};
        return make_site(i, "wake-sigz",
                         {{"alpha", cn->first}, {"beta", cn->second}});
      },
      [](const Circuit& c, const Site& s) {
        return std::vector<CircuitElement>{
            c.elements[s.start + 1],
            make_gate("Z", {s.matched.at("beta")}),
            make_gate("Z", {s.matched.at("alpha")})};
      });

  add("wake-sigz-inv", 3,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const auto cn = as_cnot(c.elements[i]);
        const GateElement* zb = as_pauli_gate(c.elements[i + 1], Axis::Z);
        const GateElement* za = as_pauli_gate(c.elements[i + 2], Axis::Z);
        if (!cn || !zb || !za) return {};
        if (!zb->controls.empty() || !za->controls.empty()) return {};
        if (zb->targets[0] != cn->second || za->targets[0] != cn->first)
          return {};
        return make_site(i, "wake-sigz-inv",
                         {{"alpha", cn->first}, {"beta", cn->second}});
      },
      [](const Circuit& c, const Site& s) {
        return std::vector<CircuitElement>{
            make_gate("Z", {s.matched.at("beta")}), c.elements[s.start]};
      });

  // Chronological [U2^{pi2}, U1^{pi1}] -> [U1^{pi1}, U2^{pi2}, wake].
  add("perm-two-ctrl-u", 2,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const GateElement* g0 = as_gate(c.elements[i]);
        const GateElement* g1 = as_gate(c.elements[i + 1]);
        if (!g0 || !g1) return {};
        if (g0->targets != g1->targets) return {};
        if (!g0->matrix.is_unitary(kMatchTol) ||
            !g1->matrix.is_unitary(kMatchTol))
          return {};
        if (!controls_commute(c, g0->controls, g1->controls)) return {};
        // Permuting two identical boxes is a no-op, not a site.
        if (controls_equal(g0->controls, g1->controls) &&
            mat_is(g0->matrix, g1->matrix, 1e-12))
          return {};
        return make_site(i, "perm-two-ctrl-u",
                         {{"targets", join_wires(g0->targets)},
                          {"pi2", controls_key(g0->controls)},
                          {"pi1", controls_key(g1->controls)},
                          {"u2", matrix_key(g0->matrix)},
                          {"u1", matrix_key(g1->matrix)}});
      },
      [](const Circuit& c, const Site& s) {
        const GateElement& u2 = *as_gate(c.elements[s.start]);
        const GateElement& u1 = *as_gate(c.elements[s.start + 1]);
        std::vector<CircuitElement> out = {u1, u2};
        const ComplexMatrix wake = u1.matrix * u2.matrix *
                                   u1.matrix.dagger() * u2.matrix.dagger();
        const WireList uw = control_union(c, u1.controls, u2.controls);
        if (uw.empty()) {
          out.emplace_back(make_matrix_gate(wake, u1.targets));
        } else {
          const ComplexMatrix prod = control_product(u1.controls, uw) *
                                     control_product(u2.controls, uw);
          out.emplace_back(make_matrix_gate(
              wake, u1.targets, {ControlSpec::proj(uw, prod)}));
        }
        return out;
      });

  add("perm-two-ctrl-u-inv", 3,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const GateElement* g1 = as_gate(c.elements[i]);      // U1^{pi1}
        const GateElement* g2 = as_gate(c.elements[i + 1]);  // U2^{pi2}
        const GateElement* gw = as_gate(c.elements[i + 2]);  // wake
        if (!g1 || !g2 || !gw) return {};
        if (g1->targets != g2->targets || g1->targets != gw->targets)
          return {};
        if (!g1->matrix.is_unitary(kMatchTol) ||
            !g2->matrix.is_unitary(kMatchTol))
          return {};
        if (!controls_commute(c, g1->controls, g2->controls)) return {};
        const ComplexMatrix expect = g1->matrix * g2->matrix *
                                     g1->matrix.dagger() *
                                     g2->matrix.dagger();
        if (!mat_is(gw->matrix, expect)) return {};
        const WireList uw = control_union(c, g1->controls, g2->controls);
        if (uw.empty()) {
          if (!gw->controls.empty()) return {};
        } else {
          if (control_union(c, gw->controls, {}) != uw) return {};
          const ComplexMatrix prod = control_product(g1->controls, uw) *
                                     control_product(g2->controls, uw);
          if (!mat_is(control_product(gw->controls, uw), prod)) return {};
        }
        return make_site(i, "perm-two-ctrl-u-inv",
                         {{"targets", join_wires(g1->targets)},
                          {"pi1", controls_key(g1->controls)},
                          {"pi2", controls_key(g2->controls)}});
      },
      [](const Circuit& c, const Site& s) {
        return std::vector<CircuitElement>{c.elements[s.start + 1],
                                           c.elements[s.start]};
      });

  // Chronological [U^{n(b)}, X(b)^{pi1}] ->
  // [X(b)^{pi1}, U^{n(b)}, U^{pi1}, (U^-2)^{pi1 n(b)}].
  add("wake-times-dot", 2,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const GateElement* gu = as_gate(c.elements[i]);
        const GateElement* gx = as_pauli_gate(c.elements[i + 1], Axis::X);
        if (!gu || !gx) return {};
        if (gu->controls.size() != 1 ||
            gu->controls[0].kind != ControlSpec::Kind::N)
          return {};
        if (!gu->matrix.is_unitary(kMatchTol)) return {};
        const std::string& b = gu->controls[0].wires[0];
        if (gx->targets[0] != b) return {};
        const WireList pi1w = control_wires(gx->controls);
        if (!wires_disjoint(pi1w, gu->targets)) return {};
        return make_site(i, "wake-times-dot",
                         {{"b", b},
                          {"targets", join_wires(gu->targets)},
                          {"pi1", controls_key(gx->controls)}});
      },
      [](const Circuit& c, const Site& s) {
        const GateElement& gu = *as_gate(c.elements[s.start]);
        const GateElement& gx = *as_gate(c.elements[s.start + 1]);
        std::vector<CircuitElement> out = {gx, gu};
        out.emplace_back(make_matrix_gate(gu.matrix, gu.targets, gx.controls));
        std::vector<ControlSpec> joint = gx.controls;
        joint.push_back(ControlSpec::n(s.matched.at("b")));
        const ComplexMatrix u_inv = gu.matrix.dagger();
        out.emplace_back(make_matrix_gate(u_inv * u_inv, gu.targets, joint));
        return out;
      });

  add("wake-times-dot-inv", 4,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const GateElement* gx = as_pauli_gate(c.elements[i], Axis::X);
        const GateElement* gu = as_gate(c.elements[i + 1]);
        const GateElement* gp = as_gate(c.elements[i + 2]);
        const GateElement* gw = as_gate(c.elements[i + 3]);
        if (!gx || !gu || !gp || !gw) return {};
        if (gu->controls.size() != 1 ||
            gu->controls[0].kind != ControlSpec::Kind::N)
          return {};
        const std::string& b = gu->controls[0].wires[0];
        if (gx->targets[0] != b) return {};
        if (gp->targets != gu->targets || gw->targets != gu->targets)
          return {};
        if (!gu->matrix.is_unitary(kMatchTol)) return {};
        if (!mat_is(gp->matrix, gu->matrix)) return {};
        if (!controls_equal(gp->controls, gx->controls)) return {};
        const ComplexMatrix u_inv = gu->matrix.dagger();
        if (!mat_is(gw->matrix, u_inv * u_inv)) return {};
        std::vector<ControlSpec> joint = gx->controls;
        joint.push_back(ControlSpec::n(b));
        if (!controls_equal(gw->controls, joint)) return {};
        return make_site(i, "wake-times-dot-inv",
                         {{"b", b},
                          {"targets", join_wires(gu->targets)},
                          {"pi1", controls_key(gx->controls)}});
      },
      [](const Circuit& c, const Site& s) {
        return std::vector<CircuitElement>{c.elements[s.start + 1],
                                           c.elements[s.start]};
      });

  // Chronological [Z(b)^{pi2}, X(b)^{pi1}] ->
  // [X(b)^{pi1}, Z(b)^{pi2}, (-1)^{pi1 pi2} wake].
  add("wake-chain-gen", 2,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const GateElement* gz = as_pauli_gate(c.elements[i], Axis::Z);
        const GateElement* gx = as_pauli_gate(c.elements[i + 1], Axis::X);
        if (!gz || !gx) return {};
        if (gz->targets != gx->targets) return {};
        if (!controls_commute(c, gz->controls, gx->controls)) return {};
        return make_site(i, "wake-chain-gen",
                         {{"b", gz->targets[0]},
                          {"pi2", controls_key(gz->controls)},
                          {"pi1", controls_key(gx->controls)}});
      },
      [](const Circuit& c, const Site& s) {
        const GateElement& gz = *as_gate(c.elements[s.start]);
        const GateElement& gx = *as_gate(c.elements[s.start + 1]);
        std::vector<CircuitElement> out = {gx, gz};
        const WireList uw = control_union(c, gx.controls, gz.controls);
        if (uw.empty()) {
          out.emplace_back(ScalarFactor{-1.0});
        } else {
          const ComplexMatrix prod = control_product(gx.controls, uw) *
                                     control_product(gz.controls, uw);
          out.emplace_back(make_matrix_gate(
              ComplexMatrix::identity(prod.rows()) - prod * 2.0, uw));
        }
        return out;
      });

  add("wake-chain-gen-inv", 3,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const GateElement* gx = as_pauli_gate(c.elements[i], Axis::X);
        const GateElement* gz = as_pauli_gate(c.elements[i + 1], Axis::Z);
        if (!gx || !gz) return {};
        if (gz->targets != gx->targets) return {};
        if (!controls_commute(c, gz->controls, gx->controls)) return {};
        const WireList uw = control_union(c, gx->controls, gz->controls);
        if (uw.empty()) {
          const auto* sf = std::get_if<ScalarFactor>(&c.elements[i + 2]);
          if (!sf || std::abs(sf->value - Complex(-1.0, 0.0)) > kMatchTol)
            return {};
        } else {
          const GateElement* gw = as_gate(c.elements[i + 2]);
          if (!gw || !gw->controls.empty()) return {};
          if (gw->targets != uw) return {};
          const ComplexMatrix prod = control_product(gx->controls, uw) *
                                     control_product(gz->controls, uw);
          if (!mat_is(gw->matrix,
                      ComplexMatrix::identity(prod.rows()) - prod * 2.0))
            return {};
        }
        return make_site(i, "wake-chain-gen-inv",
                         {{"b", gz->targets[0]},
                          {"pi1", controls_key(gx->controls)},
                          {"pi2", controls_key(gz->controls)}});
      },
      [](const Circuit& c, const Site& s) {
        return std::vector<CircuitElement>{c.elements[s.start + 1],
                                           c.elements[s.start]};
      });

  // Chronological [RZ(t)(b), X(b)^{pi1}] ->
  // [X(b)^{pi1}, RZ(t)(b), RZ(-2t)(b)^{pi1}].
  add("wake-theta", 2,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const GateElement* gr = as_gate(c.elements[i]);
        const GateElement* gx = as_pauli_gate(c.elements[i + 1], Axis::X);
        if (!gr || !gx) return {};
        if (gr->name != "RZ" || !gr->controls.empty()) return {};
        if (gr->targets != gx->targets) return {};
        return make_site(i, "wake-theta",
                         {{"b", gr->targets[0]},
                          {"pi1", controls_key(gx->controls)}});
      },
      [](const Circuit& c, const Site& s) {
        const GateElement& gr = *as_gate(c.elements[s.start]);
        const GateElement& gx = *as_gate(c.elements[s.start + 1]);
        return std::vector<CircuitElement>{
            gx, gr, make_rz(-2.0 * gr.params[0], gr.targets[0], gx.controls)};
      });

  add("wake-theta-inv", 3,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const GateElement* gx = as_pauli_gate(c.elements[i], Axis::X);
        const GateElement* gr = as_gate(c.elements[i + 1]);
        const GateElement* gw = as_gate(c.elements[i + 2]);
        if (!gx || !gr || !gw) return {};
        if (gr->name != "RZ" || !gr->controls.empty()) return {};
        if (gw->name != "RZ") return {};
        if (gr->targets != gx->targets || gw->targets != gr->targets)
          return {};
        if (std::abs(gw->params[0] + 2.0 * gr->params[0]) > kMatchTol)
          return {};
        if (!controls_equal(gw->controls, gx->controls)) return {};
        return make_site(i, "wake-theta-inv",
                         {{"b", gr->targets[0]},
                          {"pi1", controls_key(gx->controls)}});
      },
      [](const Circuit& c, const Site& s) {
        return std::vector<CircuitElement>{c.elements[s.start + 1],
                                           c.elements[s.start]};
      });

  // --- structural decompositions -------------------------------------------

  add("decompose-ctrl-u", 1,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const GateElement* g = as_gate(c.elements[i]);
        if (!g || g->targets.size() != 1 || g->controls.empty()) return {};
        if (!g->matrix.is_unitary(kMatchTol)) return {};
        return make_site(i, "decompose-ctrl-u",
                         {{"target", g->targets[0]},
                          {"pi1", controls_key(g->controls)}});
      },
      [](const Circuit& c, const Site& s) {
        const GateElement& g = *as_gate(c.elements[s.start]);
        const std::string& t = g.targets[0];
        const UnitaryDiagonalization d = diagonalize_2x2_unitary(g.matrix);
        std::vector<CircuitElement> out;
        out.emplace_back(make_matrix_gate(d.v.dagger(), {t}));
        out.emplace_back(make_gate("X", {t}, g.controls));
        out.emplace_back(make_rz(-d.delta() / 2.0, t));
        out.emplace_back(make_gate("X", {t}, g.controls));
        out.emplace_back(make_rz(d.delta() / 2.0, t));
        out.emplace_back(make_matrix_gate(d.v, {t}));
        // Phase box e^{i tbar pi1}. With dot controls only, keep the
        // nested shape: diag(1, e^{i tbar}) on the last dot, controlled by
        // the others.
        const bool all_dots = std::all_of(
            g.controls.begin(), g.controls.end(), [](const ControlSpec& cs) {
              return cs.kind == ControlSpec::Kind::N;
            });
        const Complex ph = std::polar(1.0, d.theta_bar());
        if (all_dots) {
          std::vector<ControlSpec> rest(g.controls.begin(),
                                        g.controls.end() - 1);
          out.emplace_back(
              make_matrix_gate(ComplexMatrix(2, 2, {1, 0, 0, ph}),
                               {g.controls.back().wires[0]}, rest));
        } else {
          const WireList uw = control_union(c, g.controls, {});
          const ComplexMatrix proj = control_product(g.controls, uw);
          out.emplace_back(make_matrix_gate(
              ComplexMatrix::identity(proj.rows()) + proj * (ph - 1.0), uw));
        }
        return out;
      });

  add("reduce-control", 1,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const GateElement* g = as_gate(c.elements[i]);
        if (!g || g->targets.size() != 1 || g->controls.empty()) return {};
        if (!g->matrix.is_unitary(kMatchTol)) return {};
        // Last dot control becomes the ladder wire.
        for (auto it = g->controls.rbegin(); it != g->controls.rend(); ++it)
          if (it->kind == ControlSpec::Kind::N)
            return make_site(i, "reduce-control",
                             {{"target", g->targets[0]},
                              {"dot", it->wires[0]},
                              {"ctrls", controls_key(g->controls)}});
        return {};
      },
      [](const Circuit& c, const Site& s) {
        const GateElement& g = *as_gate(c.elements[s.start]);
        const std::string& t = g.targets[0];
        const std::string& b = s.matched.at("dot");
        std::vector<ControlSpec> pi1;
        bool taken = false;
        for (auto it = g.controls.rbegin(); it != g.controls.rend(); ++it) {
          if (!taken && it->kind == ControlSpec::Kind::N) {
            taken = true;
            continue;
          }
          pi1.insert(pi1.begin(), *it);
        }
        const ComplexMatrix root = sqrt_unitary(g.matrix);
        std::vector<CircuitElement> out;
        out.emplace_back(make_matrix_gate(root, {t}, {ControlSpec::n(b)}));
        out.emplace_back(make_gate("X", {b}, pi1));
        out.emplace_back(
            make_matrix_gate(root.dagger(), {t}, {ControlSpec::n(b)}));
        out.emplace_back(make_gate("X", {b}, pi1));
        out.emplace_back(make_matrix_gate(root, {t}, pi1));
        return out;
      });

  add("lower-n3", 1,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const GateElement* g = as_gate(c.elements[i]);
        if (!g || g->targets.size() != 1 || g->controls.size() != 3) return {};
        if (!mat_is(g->matrix, pauli(Axis::X))) return {};
        for (const ControlSpec& cs : g->controls)
          if (cs.kind != ControlSpec::Kind::N) return {};
        WireList used = g->targets;
        for (const ControlSpec& cs : g->controls) used.push_back(cs.wires[0]);
        std::string anc;
        for (const std::string& w : c.wires) {
          if (std::find(used.begin(), used.end(), w) != used.end()) continue;
          if (wire_live_at(c, w, i)) {
            anc = w;
            break;
          }
        }
        if (anc.empty()) return {};
        return make_site(i, "lower-n3",
                         {{"target", g->targets[0]},
                          {"ctrls", controls_key(g->controls)}},
                         {{"ancilla", anc}});
      },
      [](const Circuit& c, const Site& s) {
        const GateElement& g = *as_gate(c.elements[s.start]);
        const std::string anc = s.options.at("ancilla");
        WireList used = g.targets;
        for (const ControlSpec& cs : g.controls) used.push_back(cs.wires[0]);
        if (std::find(used.begin(), used.end(), anc) != used.end())
          throw Error("ancilla '" + anc + "' collides with the gate");
        if (std::find(c.wires.begin(), c.wires.end(), anc) == c.wires.end())
          throw Error("ancilla '" + anc + "' is not declared");
        if (!wire_live_at(c, anc, s.start))
          throw Error("ancilla '" + anc + "' is not live at the site");
        const std::string c1 = g.controls[0].wires[0];
        const std::string c2 = g.controls[1].wires[0];
        const std::string c3 = g.controls[2].wires[0];
        const std::string& t = g.targets[0];
        std::vector<CircuitElement> out;
        for (int rep = 0; rep < 2; ++rep) {
          out.emplace_back(make_gate(
              "X", {t}, {ControlSpec::n(c1), ControlSpec::n(anc)}));
          out.emplace_back(make_gate(
              "X", {anc}, {ControlSpec::n(c2), ControlSpec::n(c3)}));
        }
        return out;
      });

  // --- measurement conversions ----------------------------------------------

  add("meas-internal-to-final", 1,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const ProjectorElement* p = as_proj(c.elements[i]);
        if (!p || p->targets.size() != 1) return {};
        const auto j = as_basis_projector(p->matrix);
        if (!j) return {};
        const std::string anc = pick_free_wire(c, p->targets);
        if (anc.empty()) return {};
        return make_site(i, "meas-internal-to-final",
                         {{"b", p->targets[0]}, {"j", std::to_string(*j)}},
                         {{"ancilla", anc}});
      },
      [](const Circuit& c, const Site& s) {
        const std::string& anc = s.options.at("ancilla");
        if (!wire_unused(c, anc))
          throw Error("ancilla '" + anc + "' is already in use");
        const int j = s.matched.at("j") == "1" ? 1 : 0;
        return std::vector<CircuitElement>{
            make_ket_bit(anc, 0), make_cnot(s.matched.at("b"), anc),
            make_bra_bit(anc, j)};
      });

  add("meas-internal-to-final-inv", 3,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const auto* k = std::get_if<KetPrep>(&c.elements[i]);
        const auto cn = as_cnot(c.elements[i + 1]);
        const auto* b = std::get_if<BraSelect>(&c.elements[i + 2]);
        if (!k || !cn || !b) return {};
        if (k->wire != b->wire || cn->second != k->wire) return {};
        if (!as_basis_ket(k->amplitudes) || *as_basis_ket(k->amplitudes) != 0)
          return {};
        const auto j = as_basis_bra(b->amplitudes);
        if (!j) return {};
        // The ancilla must appear nowhere else.
        for (std::size_t e = 0; e < c.elements.size(); ++e) {
          if (e >= i && e < i + 3) continue;
          const WireList ws = element_wires(c.elements[e]);
          if (std::find(ws.begin(), ws.end(), k->wire) != ws.end()) return {};
        }
        return make_site(i, "meas-internal-to-final-inv",
                         {{"b", cn->first}, {"j", std::to_string(*j)}});
      },
      [](const Circuit&, const Site& s) {
        const int j = s.matched.at("j") == "1" ? 1 : 0;
        return std::vector<CircuitElement>{
            make_projz(j, s.matched.at("b"))};
      });

  add("meas-bibit-to-2cnots", 1,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const ProjectorElement* p = as_proj(c.elements[i]);
        if (!p || p->targets.size() != 2) return {};
        const auto j = as_zz_projector(p->matrix);
        if (!j) return {};
        return make_site(i, "meas-bibit-to-2cnots",
                         {{"a", p->targets[0]},
                          {"b", p->targets[1]},
                          {"j", std::to_string(*j)}});
      },
      [](const Circuit&, const Site& s) {
        const std::string& a = s.matched.at("a");
        const std::string& b = s.matched.at("b");
        const int j = s.matched.at("j") == "1" ? 1 : 0;
        return std::vector<CircuitElement>{make_cnot(a, b), make_projz(j, b),
                                           make_cnot(a, b)};
      });

  add("meas-bibit-to-2cnots-inv", 3,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const auto c1 = as_cnot(c.elements[i]);
        const ProjectorElement* p = as_proj(c.elements[i + 1]);
        const auto c2 = as_cnot(c.elements[i + 2]);
        if (!c1 || !p || !c2 || *c1 != *c2) return {};
        if (p->targets.size() != 1 || p->targets[0] != c1->second) return {};
        const auto j = as_basis_projector(p->matrix);
        if (!j) return {};
        return make_site(i, "meas-bibit-to-2cnots-inv",
                         {{"a", c1->first},
                          {"b", c1->second},
                          {"j", std::to_string(*j)}});
      },
      [](const Circuit&, const Site& s) {
        const int j = s.matched.at("j") == "1" ? 1 : 0;
        return std::vector<CircuitElement>{
            make_projzz(j, s.matched.at("a"), s.matched.at("b"))};
      });

  add("meas-bibit-to-1cnot", 2,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const ProjectorElement* p = as_proj(c.elements[i]);
        const auto* br = std::get_if<BraSelect>(&c.elements[i + 1]);
        if (!p || !br || p->targets.size() != 2) return {};
        const auto j = as_zz_projector(p->matrix);
        if (!j || br->wire != p->targets[0]) return {};
        const auto k = as_basis_bra(br->amplitudes);
        if (!k) return {};
        return make_site(i, "meas-bibit-to-1cnot",
                         {{"a", p->targets[0]},
                          {"b", p->targets[1]},
                          {"j", std::to_string(*j)},
                          {"k", std::to_string(*k)}});
      },
      [](const Circuit&, const Site& s) {
        const std::string& a = s.matched.at("a");
        const std::string& b = s.matched.at("b");
        const int j = s.matched.at("j") == "1" ? 1 : 0;
        const int k = s.matched.at("k") == "1" ? 1 : 0;
        std::vector<CircuitElement> out = {make_cnot(a, b), make_projz(j, b)};
        if (k) out.emplace_back(make_gate("X", {b}));
        out.emplace_back(make_bra_bit(a, k));
        return out;
      });

  add("meas-bibit-alt", 1,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const ProjectorElement* p = as_proj(c.elements[i]);
        if (!p || p->targets.size() != 2) return {};
        const auto j = as_zz_projector(p->matrix);
        if (!j) return {};
        const std::string anc = pick_free_wire(c, p->targets);
        if (anc.empty()) return {};
        return make_site(i, "meas-bibit-alt",
                         {{"b", p->targets[0]},
                          {"c", p->targets[1]},
                          {"j", std::to_string(*j)}},
                         {{"ancilla", anc}});
      },
      [](const Circuit& c, const Site& s) {
        const std::string& anc = s.options.at("ancilla");
        if (!wire_unused(c, anc))
          throw Error("ancilla '" + anc + "' is already in use");
        const int j = s.matched.at("j") == "1" ? 1 : 0;
        return std::vector<CircuitElement>{
            make_ket_bit(anc, 0), make_cnot(s.matched.at("c"), anc),
            make_cnot(s.matched.at("b"), anc), make_bra_bit(anc, j)};
      });

  add("meas-cnot-to-2meas", 1,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const auto cn = as_cnot(c.elements[i]);
        if (!cn) return {};
        const std::string anc = pick_free_wire(c, {cn->first, cn->second});
        if (anc.empty()) return {};
        return make_site(i, "meas-cnot-to-2meas",
                         {{"a", cn->first}, {"c", cn->second}},
                         {{"ancilla", anc}, {"k", "0"}, {"j1", "0"},
                          {"j2", "0"}});
      },
      [](const Circuit& c, const Site& s) {
        const std::string& a = s.matched.at("a");
        const std::string& t = s.matched.at("c");
        const std::string& b = s.options.at("ancilla");
        if (!wire_unused(c, b))
          throw Error("ancilla '" + b + "' is already in use");
        const int k = option_bit(s, "k");
        const int j1 = option_bit(s, "j1");
        const int j2 = option_bit(s, "j2");
        std::vector<CircuitElement> out;
        out.emplace_back(make_ket_bit(b, 0));
        out.emplace_back(make_gate("H", {b}));
        out.emplace_back(make_projzz(j1, a, b));
        out.emplace_back(make_gate("H", {b}));
        out.emplace_back(make_gate("H", {t}));
        out.emplace_back(make_projzz(j2, b, t));
        out.emplace_back(make_gate("H", {b}));
        out.emplace_back(make_gate("H", {t}));
        if (j2) out.emplace_back(make_gate("Z", {a}));
        if ((k + j1) % 2) out.emplace_back(make_gate("X", {t}));
        out.emplace_back(make_bra_bit(b, k));
        const double sign = ((k + j1) * j2) % 2 ? -1.0 : 1.0;
        out.emplace_back(ScalarFactor{sign * 2.0 * std::sqrt(2.0)});
        return out;
      });

  add("meas-cnot-to-1meas", 2,
      [](const Circuit& c, std::size_t i) -> std::optional<Site> {
        const auto* kp = std::get_if<KetPrep>(&c.elements[i]);
        const auto cn = as_cnot(c.elements[i + 1]);
        if (!kp || !cn || cn->second != kp->wire) return {};
        const auto j = as_basis_ket(kp->amplitudes);
        if (!j) return {};
        return make_site(i, "meas-cnot-to-1meas",
                         {{"a", cn->first},
                          {"b", kp->wire},
                          {"j", std::to_string(*j)}},
                         {{"k", "0"}});
      },
      [](const Circuit&, const Site& s) {
        const std::string& a = s.matched.at("a");
        const std::string& b = s.matched.at("b");
        const int j = s.matched.at("j") == "1" ? 1 : 0;
        const int k = option_bit(s, "k");
        std::vector<CircuitElement> out;
        out.emplace_back(make_ket_bit(b, k));
        out.emplace_back(make_gate("H", {b}));
        out.emplace_back(make_projzz(j, a, b));
        if (k) out.emplace_back(make_gate("Z", {a}));
        out.emplace_back(
            ScalarFactor{(j && k) ? -std::sqrt(2.0) : std::sqrt(2.0)});
        return out;
      });

  return rules;
}

}  // namespace

const std::vector<RewriteRule>& list_rules() {
  static const std::vector<RewriteRule> rules = build_rules();
  return rules;
}

const RewriteRule& find_rule(const std::string& id) {
  for (const RewriteRule& r : list_rules())
    if (r.id == id) return r;
  throw Error("unknown rewrite rule '" + id + "'");
}

std::vector<Site> find_sites(const Circuit& c, const std::string& rule_id) {
  const RewriteRule& rule = find_rule(rule_id);
  std::vector<Site> sites;
  if (c.elements.size() < rule.arity) return sites;
  for (std::size_t i = 0; i + rule.arity <= c.elements.size(); ++i)
    if (auto s = rule.matcher(c, i)) sites.push_back(std::move(*s));
  return sites;
}

Circuit apply(const Circuit& c, const std::string& rule_id, const Site& site) {
  const RewriteRule& rule = find_rule(rule_id);
  if (site.start + rule.arity > c.elements.size())
    throw Error("rewrite window out of range");
  const auto fresh = rule.matcher(c, site.start);
  if (!fresh || fresh->matched != site.matched)
    throw Error("stale site: rule '" + rule_id +
                "' no longer matches at element " +
                std::to_string(site.start));
  Circuit out(c.wires);
  out.elements.assign(c.elements.begin(),
                      c.elements.begin() +
                          static_cast<std::ptrdiff_t>(site.start));
  const auto replacement = rule.producer(c, site);
  out.elements.insert(out.elements.end(), replacement.begin(),
                      replacement.end());
  out.elements.insert(out.elements.end(),
                      c.elements.begin() + static_cast<std::ptrdiff_t>(
                                               site.start + rule.arity),
                      c.elements.end());
  validate(out);
  return out;
}

Circuit decompose_controlled_u(const Circuit& c, const Site& site) {
  return apply(c, "decompose-ctrl-u", site);
}

Circuit reduce_control(const Circuit& c, const Site& site) {
  return apply(c, "reduce-control", site);
}

Circuit lower_n3_cnot(const Circuit& c, const Site& site,
                      const std::string& ancilla) {
  Site s = site;
  if (!ancilla.empty()) s.options["ancilla"] = ancilla;
  if (!s.options.count("ancilla"))
    throw Error("no ancilla available for the n^3 lowering");
  return apply(c, "lower-n3", s);
}

Circuit convert_measurement(const Circuit& c, const Site& site,
                            const std::string& direction) {
  if (direction.rfind("meas-", 0) != 0)
    throw Error("'" + direction + "' is not a measurement conversion rule");
  return apply(c, direction, site);
}

Circuit nearest_neighborize(const Circuit& c) {
  auto pos_of = [&c](const std::string& w) {
    return static_cast<std::size_t>(
        std::find(c.wires.begin(), c.wires.end(), w) - c.wires.begin());
  };

  std::function<void(std::vector<CircuitElement>&, std::size_t, std::size_t)>
      expand = [&](std::vector<CircuitElement>& out, std::size_t cp,
                   std::size_t tp) {
        const std::size_t d = cp > tp ? cp - tp : tp - cp;
        if (d <= 1) {
          out.emplace_back(make_cnot(c.wires[cp], c.wires[tp]));
          return;
        }
        if (d == 2) {
          const std::size_t m = (cp + tp) / 2;
          expand(out, m, tp);
          expand(out, cp, m);
          expand(out, m, tp);
          expand(out, cp, m);
          return;
        }
        if (d == 3) {
          const std::size_t m1 = cp < tp ? cp + 1 : cp - 1;
          const std::size_t m2 = cp < tp ? cp + 2 : cp - 2;
          for (int rep = 0; rep < 2; ++rep) {
            expand(out, m1, m2);
            expand(out, m2, tp);
            expand(out, m1, m2);
            expand(out, cp, m1);
          }
          return;
        }
        // Beyond distance 3: bridge through the midpoint and recurse. The
        // gate count grows accordingly; no optimization is attempted.
        const std::size_t m = (cp + tp) / 2;
        expand(out, m, tp);
        expand(out, cp, m);
        expand(out, m, tp);
        expand(out, cp, m);
      };

  Circuit out(c.wires);
  for (const CircuitElement& e : c.elements) {
    const auto cn = as_cnot(e);
    if (!cn) {
      out.elements.push_back(e);
      continue;
    }
    const std::size_t cp = pos_of(cn->first), tp = pos_of(cn->second);
    const std::size_t d = cp > tp ? cp - tp : tp - cp;
    if (d <= 1) {
      out.elements.push_back(e);
      continue;
    }
    expand(out.elements, cp, tp);
  }
  validate(out);
  return out;
}

}  // namespace qcpaul
