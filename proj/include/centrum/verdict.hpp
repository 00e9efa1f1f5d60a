#pragma once

#include <optional>
#include <string>
#include <vector>

namespace centrum {

enum class Status { holds_exhaustive, fails, no_counterexample_up_to };

struct WitnessPart {
    std::string role;   // "a", "r", "f", ...
    std::string value;  // display name
    int index = -1;     // element index when the part is a single element
};

// Result of one predicate check. `fails` always carries a witness that
// re-checks against the defining formula; `holds_exhaustive` is only
// produced by finitely quantified sweeps.
struct Verdict {
    Status status = Status::holds_exhaustive;
    std::optional<int> bound;  // set for no_counterexample_up_to
    std::vector<WitnessPart> witness;

    static Verdict holds() { return Verdict{Status::holds_exhaustive, std::nullopt, {}}; }
    static Verdict fail(std::vector<WitnessPart> w) {
        return Verdict{Status::fails, std::nullopt, std::move(w)};
    }
    static Verdict no_counterexample(int d) { return Verdict{Status::no_counterexample_up_to, d, {}}; }

    bool failed() const { return status == Status::fails; }
    // "favorable" = anything that is not a definite failure.
    bool favorable() const { return status != Status::fails; }

    // Token for the machine output grammar: holds_exhaustive | fails |
    // no_counterexample_up_to(d).
    std::string result_token() const {
        switch (status) {
            case Status::holds_exhaustive: return "holds_exhaustive";
            case Status::fails: return "fails";
            case Status::no_counterexample_up_to:
                return "no_counterexample_up_to(" + std::to_string(bound.value_or(0)) + ")";
        }
        return "?";
    }

    // Witness rendering for machine lines: one value bare, several as a tuple.
    std::string witness_names() const {
        if (witness.empty()) return "";
        if (witness.size() == 1) return witness[0].value;
        std::string out = "(";
        for (size_t k = 0; k < witness.size(); ++k) {
            if (k) out += ",";
            out += witness[k].value;
        }
        out += ")";
        return out;
    }
};

} // namespace centrum
