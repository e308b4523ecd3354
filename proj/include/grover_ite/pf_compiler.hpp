// Copyright 2026 The grover-ite-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grover_ite/search_core.hpp"

namespace grover_ite {

enum class Generator { Diffusion, Oracle };

struct Pulse {
    Generator generator = Generator::Diffusion;
    double angle = 0.0;

    bool operator==(const Pulse&) const = default;
};

/// Pulses are stored in application order: pulses[0] acts on the state first.
/// global_phase multiplies the whole product; it is N*pi for a Grover
/// sequence of N iterates G = -D U_f and 0 for compiled formulas.
struct AngleSchedule {
    std::vector<Pulse> pulses;
    int claimed_order = 0;
    double s_target = 0.0;
    double global_phase = 0.0;
};

AngleSchedule inverse(const AngleSchedule& schedule);

/// Merges neighbouring pulses on the same generator and drops zero angles.
AngleSchedule canonicalize(const AngleSchedule& schedule);

/// One Grover iterate as (alpha on diffusion, beta on oracle).
struct GroverStep {
    double alpha = 0.0;
    double beta = 0.0;

    bool operator==(const GroverStep&) const = default;
};

/// Oracle-then-diffusion pairs, global phase N*pi.
AngleSchedule from_grover(const std::vector<GroverStep>& steps);
/// Inverse of from_grover. Throws NonAlternatingSchedule unless the pulses
/// alternate O, D, O, D, ...
std::vector<GroverStep> to_grover(const AngleSchedule& schedule);

class FormulaKind {
public:
    enum class Tag { GroupCommutator, ThirdOrder, TwoCopies, JeanKoseleff, FiveCopies };

    static constexpr int kMaxDepth = 6;

    static FormulaKind group_commutator() { return FormulaKind(Tag::GroupCommutator, nullptr); }
    static FormulaKind third_order() { return FormulaKind(Tag::ThirdOrder, nullptr); }
    static FormulaKind two_copies(FormulaKind base) { return wrap(Tag::TwoCopies, std::move(base)); }
    static FormulaKind jean_koseleff(FormulaKind base) {
        return wrap(Tag::JeanKoseleff, std::move(base));
    }
    static FormulaKind five_copies(FormulaKind base) { return wrap(Tag::FiveCopies, std::move(base)); }

    /// Accepts "gc", "third", "two(...)", "jk(...)", "five(...)".
    static FormulaKind parse(std::string_view text);

    Tag tag() const noexcept { return tag_; }
    const FormulaKind* base() const noexcept { return base_.get(); }
    /// Number of recursive wrappers.
    int depth() const noexcept;
    /// m in an error of order s^{m/2}.
    int claimed_order() const noexcept;
    std::string name() const;

private:
    FormulaKind(Tag tag, std::shared_ptr<const FormulaKind> base)
        : tag_(tag), base_(std::move(base)) {}
    static FormulaKind wrap(Tag tag, FormulaKind base) {
        return FormulaKind(tag, std::make_shared<const FormulaKind>(std::move(base)));
    }

    Tag tag_;
    std::shared_ptr<const FormulaKind> base_;
};

/// Product-formula schedule approximating e^{s[H_f, psi0]}, split into
/// `fragments` equal pieces.
AngleSchedule compile(const FormulaKind& kind, double s, int fragments = 1);

/// Product of the pulses; the global phase is left out.
DenseOperator schedule_unitary(const SearchInstance& inst, const AngleSchedule& schedule);
DenseOperator schedule_unitary_with_phase(const SearchInstance& inst,
                                          const AngleSchedule& schedule);

using ErrorPoint = std::pair<double, double>;  // (s, error)

inline constexpr std::int64_t kMaxFormulaErrorDim = 512;

std::vector<ErrorPoint> measure_formula_error(const SearchInstance& inst, const FormulaKind& kind,
                                              const std::vector<double>& s_grid,
                                              int fragments = 1);

/// Least-squares slope of log(error) against log(s). Points with
/// error <= 1e-14 are ignored; at least four must remain.
double fit_order(const std::vector<ErrorPoint>& points);

/// Eight log-spaced points on [1e-3, 1e-1].
std::vector<double> default_order_grid();

}  // namespace grover_ite
