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

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcpaul/circuit.hpp"

namespace qcpaul {

/// A position where a rule matches: a window of consecutive elements
/// starting at `start`, plus what the matcher bound there. `options` are
/// producer parameters (free outcome bits, ancilla overrides); they are not
/// part of the match and may be edited before apply().
struct Site {
  std::size_t start = 0;
  std::string rule;
  std::map<std::string, std::string> matched;
  std::map<std::string, std::string> options;
};

/// A directed, semantics-preserving transformation. Every registered rule
/// satisfies: evaluate(apply(c, rule, site)) == evaluate(c) within
/// tolerance at every site, bras and kets included. Inverse directions are
/// registered separately with an "-inv" suffix.
struct RewriteRule {
  std::string id;
  std::size_t arity = 1;
  std::function<std::optional<Site>(const Circuit&, std::size_t)> matcher;
  std::function<std::vector<CircuitElement>(const Circuit&, const Site&)>
      producer;
};

const std::vector<RewriteRule>& list_rules();
const RewriteRule& find_rule(const std::string& id);

/// All window positions where the rule matches, ascending.
std::vector<Site> find_sites(const Circuit& c, const std::string& rule_id);

/// Replaces the matched window with the rule's production. The matcher is
/// re-run first; a window that no longer matches (stale site) is an error.
Circuit apply(const Circuit& c, const std::string& rule_id, const Site& site);

/// U^{pi} at `site` replaced by the V / RZ / controlled-X / phase-box
/// sequence from the eigendecomposition U = e^{i tbar} V e^{i D sZ} Vdag.
/// With all-dot controls the phase box stays a controlled diag(1,
/// e^{i tbar}) on the last dot wire.
Circuit decompose_controlled_u(const Circuit& c, const Site& site);

/// U controlled by pi1 and a dot on wire b, replaced by the square-root
/// ladder; the control rank of every U payload drops by one.
Circuit reduce_control(const Circuit& c, const Site& site);

/// Expands every plain CNOT spanning wire distance >= 2 (declaration order
/// defines adjacency) into the nearest-neighbor ladders: 4 CNOTs at
/// distance 2, 8 at distance 3, and recursive midpoint bridging beyond.
Circuit nearest_neighborize(const Circuit& c);

/// An X with three dot controls replaced by four doubly controlled NOTs
/// through an ancilla in any state. The ancilla defaults to the first wire
/// that is live across the window; pass a name to choose it.
Circuit lower_n3_cnot(const Circuit& c, const Site& site,
                      const std::string& ancilla = "");

/// Applies one of the measurement conversion rules ("meas-..." ids) at the
/// site. Free outcome bits ride in site.options (defaults 0).
Circuit convert_measurement(const Circuit& c, const Site& site,
                            const std::string& direction);

}  // namespace qcpaul
