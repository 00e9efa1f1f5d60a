#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "centrum/error.hpp"
#include "centrum/limits.hpp"
#include "centrum/subset.hpp"

namespace centrum {

// Element of a ring, identified by its table index. Elements of different
// ring instances must never be mixed; nothing enforces that at the type
// level, the index is only meaningful next to its ring.
using Elem = int;

enum class Sidedness { left, right, two_sided };

// A finite associative ring with identity, given by explicit addition and
// multiplication tables. Instances are immutable after validation and safe
// to share across threads; every operation on them is a pure function.
class FiniteRing {
public:
    struct Tables {
        int order = 0;
        std::vector<uint16_t> add;  // order*order, row-major
        std::vector<uint16_t> mul;
        Elem zero = 0;
        Elem one = 1;
        std::vector<std::string> names;  // may be empty: defaults to decimal indices
    };

    // Checks every ring axiom by exhaustive loops and returns the carrier.
    // Throws Error(axiom) naming the failed axiom with a witness triple, or
    // Error(dimension) for malformed tables.
    static FiniteRing validate(Tables t, const Limits& lim = Limits{});

    int order() const { return order_; }
    Elem zero() const { return zero_; }
    Elem one() const { return one_; }

    Elem add(Elem a, Elem b) const { return add_[size_t(a) * order_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[size_t(a) * order_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    const uint16_t* add_row(Elem a) const { return add_.data() + size_t(a) * order_; }
    const uint16_t* mul_row(Elem a) const { return mul_.data() + size_t(a) * order_; }

    // k-fold product, k >= 1.
    Elem pow(Elem a, int k) const;

    // Least k with a^k = 0, or 0 if a is not nilpotent. Powers of a cycle
    // within order() steps, so the search stops there.
    int nilpotency_index(Elem a) const;
    bool is_nilpotent(Elem a) const { return nilpotency_index(a) > 0; }

    bool is_central(Elem a) const;
    bool is_idempotent(Elem a) const { return mul(a, a) == a; }

    const std::string& name(Elem a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }

    const Tables& tables() const { return tables_; }

private:
    FiniteRing() = default;

    int order_ = 0;
    Elem zero_ = 0;
    Elem one_ = 0;
    std::vector<uint16_t> add_;
    std::vector<uint16_t> mul_;
    std::vector<uint16_t> neg_;
    std::vector<std::string> names_;
    Tables tables_;  // retained for export and introspection
};

using RingPtr = std::shared_ptr<const FiniteRing>;

// --- elementary algebra on one ring ---

Subset center(const FiniteRing& R);
Subset idempotents(const FiniteRing& R);
Subset units(const FiniteRing& R);

Subset right_annihilator(const FiniteRing& R, Elem a);  // {x : a*x = 0}
Subset left_annihilator(const FiniteRing& R, Elem a);   // {x : x*a = 0}

// {a*x : x in R}; a right ideal since the ring has an identity.
Subset principal_right_ideal(const FiniteRing& R, Elem a);
Subset principal_left_ideal(const FiniteRing& R, Elem a);

// Least ideal of the requested sidedness containing gens: fixpoint of
// closing under addition, negation and the allowed multiplications.
Subset ideal_closure(const FiniteRing& R, const std::vector<Elem>& gens, Sidedness side);

// Every two-sided ideal, by closing the lattice generated by principal
// ideals under pairwise sums. Sorted by bitset value. Throws Error(cap)
// when order(R) exceeds lim.ideal_enum_cap.
std::vector<Subset> all_two_sided_ideals(const FiniteRing& R, const Limits& lim = Limits{});

bool is_right_ideal(const FiniteRing& R, const Subset& S);
bool is_left_ideal(const FiniteRing& R, const Subset& S);
bool is_two_sided_ideal(const FiniteRing& R, const Subset& S);

// E intersects every nonzero principal right ideal nontrivially. Testing
// principal ideals suffices: every nonzero right ideal contains one.
// Throws Error(hypothesis) if E is not a right ideal.
bool is_essential_right_ideal(const FiniteRing& R, const Subset& E);
bool is_essential_left_ideal(const FiniteRing& R, const Subset& E);

// Element-name helper shared by constructions and the CLI.
std::string subset_to_string(const FiniteRing& R, const Subset& S);

} // namespace centrum
