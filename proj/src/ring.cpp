#include "centrum/ring.hpp"

#include <array>
#include <atomic>
#include <cstdlib>
#include <set>
#include <sstream>

#include "parallel.hpp"

namespace centrum {

Limits Limits::from_env() {
    Limits lim;
    if (const char* s = std::getenv("CENTRUM_MAX_ORDER")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v >= 2) lim.max_order = static_cast<int>(v);
    }
    return lim;
}

namespace {

// Smallest (a,b,c) violating one of the exhaustively checked axioms,
// reduced across threads so reports stay deterministic.
struct ViolationMin {
    std::atomic<uint64_t> packed{~uint64_t(0)};

    void offer(int a, int b, int c) {
        uint64_t key = (uint64_t(uint16_t(a)) << 32) | (uint64_t(uint16_t(b)) << 16) | uint16_t(c);
        uint64_t cur = packed.load(std::memory_order_relaxed);
        while (key < cur && !packed.compare_exchange_weak(cur, key, std::memory_order_relaxed)) {
        }
    }
    bool found() const { return packed.load() != ~uint64_t(0); }
    std::array<int, 3> triple() const {
        uint64_t v = packed.load();
        return {int((v >> 32) & 0xffff), int((v >> 16) & 0xffff), int(v & 0xffff)};
    }
};

std::string elem_list(const std::vector<std::string>& names, std::initializer_list<int> idx) {
    std::ostringstream os;
    bool first = true;
    for (int i : idx) {
        if (!first) os << ", ";
        first = false;
        os << names[i] << "(#" << i << ")";
    }
    return os.str();
}

} // namespace

FiniteRing FiniteRing::validate(Tables t, const Limits& lim) {
    const int n = t.order;
    if (n < 2)
        fail(ErrKind::dimension, "ring order must be at least 2 (zero = one rejected), got " +
                                       std::to_string(n));
    if (n > lim.max_order)
        fail(ErrKind::cap, "order " + std::to_string(n) + " exceeds the configured cap " +
                               std::to_string(lim.max_order));
    if (n > 65535) fail(ErrKind::cap, "order exceeds table representation limit 65535");
    if (t.add.size() != size_t(n) * n || t.mul.size() != size_t(n) * n)
        fail(ErrKind::dimension, "add/mul tables must be square of size order*order");
    for (uint16_t v : t.add)
        if (v >= n) fail(ErrKind::dimension, "add table entry out of range");
    for (uint16_t v : t.mul)
        if (v >= n) fail(ErrKind::dimension, "mul table entry out of range");
    if (t.zero < 0 || t.zero >= n || t.one < 0 || t.one >= n)
        fail(ErrKind::dimension, "zero/one index out of range");
    if (t.zero == t.one) fail(ErrKind::dimension, "zero and one must differ");

    if (t.names.empty()) {
        t.names.reserve(n);
        for (int i = 0; i < n; ++i) t.names.push_back(std::to_string(i));
    }
    if (t.names.size() != size_t(n)) fail(ErrKind::dimension, "names must cover every element");
    {
        std::set<std::string> seen(t.names.begin(), t.names.end());
        if (seen.size() != size_t(n)) fail(ErrKind::dimension, "element names must be pairwise distinct");
    }

    const uint16_t* add = t.add.data();
    const uint16_t* mul = t.mul.data();
    const auto& nm = t.names;
    const int zero = t.zero;
    const int one = t.one;
    auto A = [&](int a, int b) { return add[size_t(a) * n + b]; };
    auto M = [&](int a, int b) { return mul[size_t(a) * n + b]; };

    // additive identity
    for (int a = 0; a < n; ++a)
        if (A(zero, a) != a || A(a, zero) != a)
            fail(ErrKind::axiom,
                 "additive identity axiom: zero + " + elem_list(nm, {a}) + " != " + nm[a]);
    // additive commutativity
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (A(a, b) != A(b, a))
                fail(ErrKind::axiom, "additive commutativity axiom, witness " + elem_list(nm, {a, b}));
    // negatives
    std::vector<uint16_t> neg(n, 0);
    for (int a = 0; a < n; ++a) {
        int found = -1;
        for (int b = 0; b < n; ++b)
            if (A(a, b) == zero) {
                found = b;
                break;
            }
        if (found < 0) fail(ErrKind::axiom, "additive inverse axiom, witness " + elem_list(nm, {a}));
        neg[a] = uint16_t(found);
    }
    // multiplicative identity
    for (int a = 0; a < n; ++a)
        if (M(one, a) != a || M(a, one) != a)
            fail(ErrKind::axiom, "identity axiom: 1*" + elem_list(nm, {a}) + " or " + nm[a] +
                                       "*1 differs from " + nm[a]);

    // associativity and distributivity, the O(n^3) sweeps
    ViolationMin bad_add_assoc, bad_mul_assoc, bad_ldist, bad_rdist;
    detail::parallel_chunks(n, [&](int lo, int hi) {
        for (int a = lo; a < hi; ++a) {
            const uint16_t* arow_add = add + size_t(a) * n;
            const uint16_t* arow_mul = mul + size_t(a) * n;
            for (int b = 0; b < n; ++b) {
                const uint16_t* brow_add = add + size_t(b) * n;
                const uint16_t* brow_mul = mul + size_t(b) * n;
                const uint16_t* ab_add_row = add + size_t(arow_add[b]) * n;
                const uint16_t* ab_mul_row = mul + size_t(arow_mul[b]) * n;
                const int ab = arow_mul[b];
                for (int c = 0; c < n; ++c) {
                    if (ab_add_row[c] != arow_add[brow_add[c]]) {
                        bad_add_assoc.offer(a, b, c);
                        return;
                    }
                    if (ab_mul_row[c] != arow_mul[brow_mul[c]]) {
                        bad_mul_assoc.offer(a, b, c);
                        return;
                    }
                    // a*(b+c) = a*b + a*c
                    if (arow_mul[brow_add[c]] != add[size_t(ab) * n + arow_mul[c]]) {
                        bad_ldist.offer(a, b, c);
                        return;
                    }
                    // (b+c)*a = b*a + c*a
                    if (mul[size_t(brow_add[c]) * n + a] !=
                        add[size_t(brow_mul[a]) * n + mul[size_t(c) * n + a]]) {
                        bad_rdist.offer(a, b, c);
                        return;
                    }
                }
            }
        }
    });
    if (bad_add_assoc.found()) {
        auto [a, b, c] = bad_add_assoc.triple();
        fail(ErrKind::axiom, "additive associativity axiom, witness " + elem_list(nm, {a, b, c}));
    }
    if (bad_mul_assoc.found()) {
        auto [a, b, c] = bad_mul_assoc.triple();
        fail(ErrKind::axiom, "multiplicative associativity axiom, witness " + elem_list(nm, {a, b, c}));
    }
    if (bad_ldist.found()) {
        auto [a, b, c] = bad_ldist.triple();
        fail(ErrKind::axiom, "left distributivity axiom, witness " + elem_list(nm, {a, b, c}));
    }
    if (bad_rdist.found()) {
        auto [a, b, c] = bad_rdist.triple();
        fail(ErrKind::axiom, "right distributivity axiom, witness " + elem_list(nm, {a, b, c}));
    }

    FiniteRing R;
    R.order_ = n;
    R.zero_ = t.zero;
    R.one_ = t.one;
    R.add_ = t.add;
    R.mul_ = t.mul;
    R.neg_ = std::move(neg);
    R.names_ = t.names;
    R.tables_ = std::move(t);
    return R;
}

Elem FiniteRing::pow(Elem a, int k) const {
    if (k < 1) fail(ErrKind::usage, "pow requires a positive exponent");
    Elem r = a;
    for (int i = 1; i < k; ++i) r = mul(r, a);
    return r;
}

int FiniteRing::nilpotency_index(Elem a) const {
    Elem p = a;
    for (int k = 1; k <= order_; ++k) {
        if (p == zero_) return k;
        p = mul(p, a);
    }
    return 0;
}

bool FiniteRing::is_central(Elem a) const {
    const uint16_t* row = mul_row(a);
    for (int x = 0; x < order_; ++x)
        if (row[x] != mul(x, a)) return false;
    return true;
}

Subset center(const FiniteRing& R) {
    Subset s(R.order());
    for (int a = 0; a < R.order(); ++a)
        if (R.is_central(a)) s.set(a);
    return s;
}

Subset idempotents(const FiniteRing& R) {
    Subset s(R.order());
    for (int a = 0; a < R.order(); ++a)
        if (R.is_idempotent(a)) s.set(a);
    return s;
}

Subset units(const FiniteRing& R) {
    Subset s(R.order());
    for (int a = 0; a < R.order(); ++a)
        for (int b = 0; b < R.order(); ++b)
            if (R.mul(a, b) == R.one() && R.mul(b, a) == R.one()) {
                s.set(a);
                break;
            }
    return s;
}

Subset right_annihilator(const FiniteRing& R, Elem a) {
    Subset s(R.order());
    const uint16_t* row = R.mul_row(a);
    for (int x = 0; x < R.order(); ++x)
        if (row[x] == R.zero()) s.set(x);
    return s;
}

Subset left_annihilator(const FiniteRing& R, Elem a) {
    Subset s(R.order());
    for (int x = 0; x < R.order(); ++x)
        if (R.mul(x, a) == R.zero()) s.set(x);
    return s;
}

Subset principal_right_ideal(const FiniteRing& R, Elem a) {
    Subset s(R.order());
    const uint16_t* row = R.mul_row(a);
    for (int x = 0; x < R.order(); ++x) s.set(row[x]);
    return s;
}

Subset principal_left_ideal(const FiniteRing& R, Elem a) {
    Subset s(R.order());
    for (int x = 0; x < R.order(); ++x) s.set(R.mul(x, a));
    return s;
}

Subset ideal_closure(const FiniteRing& R, const std::vector<Elem>& gens, Sidedness side) {
    const int n = R.order();
    Subset s(n);
    std::vector<Elem> members;
    std::vector<Elem> work;
    auto push = [&](Elem x) {
        if (!s.test(x)) {
            s.set(x);
            members.push_back(x);
            work.push_back(x);
        }
    };
    push(R.zero());
    for (Elem g : gens) {
        if (g < 0 || g >= n) fail(ErrKind::dimension, "generator index out of range");
        push(g);
    }
    while (!work.empty()) {
        Elem x = work.back();
        work.pop_back();
        push(R.neg(x));
        // sums with everything already present
        for (size_t k = 0; k < members.size(); ++k) push(R.add(x, members[k]));
        if (side == Sidedness::right || side == Sidedness::two_sided) {
            const uint16_t* row = R.mul_row(x);
            for (int r = 0; r < n; ++r) push(row[r]);
        }
        if (side == Sidedness::left || side == Sidedness::two_sided) {
            for (int r = 0; r < n; ++r) push(R.mul(r, x));
        }
    }
    return s;
}

bool is_right_ideal(const FiniteRing& R, const Subset& S) {
    if (S.universe() != R.order() || !S.test(R.zero())) return false;
    auto mem = S.members();
    for (Elem a : mem)
        for (Elem b : mem)
            if (!S.test(R.add(a, b))) return false;
    for (Elem a : mem) {
        const uint16_t* row = R.mul_row(a);
        for (int r = 0; r < R.order(); ++r)
            if (!S.test(row[r])) return false;
    }
    return true;
}

bool is_left_ideal(const FiniteRing& R, const Subset& S) {
    if (S.universe() != R.order() || !S.test(R.zero())) return false;
    auto mem = S.members();
    for (Elem a : mem)
        for (Elem b : mem)
            if (!S.test(R.add(a, b))) return false;
    for (Elem a : mem)
        for (int r = 0; r < R.order(); ++r)
            if (!S.test(R.mul(r, a))) return false;
    return true;
}

bool is_two_sided_ideal(const FiniteRing& R, const Subset& S) {
    return is_right_ideal(R, S) && is_left_ideal(R, S);
}

std::vector<Subset> all_two_sided_ideals(const FiniteRing& R, const Limits& lim) {
    const int n = R.order();
    if (n > lim.ideal_enum_cap)
        fail(ErrKind::cap, "ideal enumeration capped at order " + std::to_string(lim.ideal_enum_cap) +
                               ", ring has order " + std::to_string(n));

    // distinct principal two-sided ideals
    std::vector<Subset> principals;
    {
        std::set<std::vector<uint64_t>> seen;
        for (int a = 0; a < n; ++a) {
            Subset p = ideal_closure(R, {a}, Sidedness::two_sided);
            if (seen.insert(p.blocks()).second) principals.push_back(std::move(p));
        }
    }

    std::set<std::vector<uint64_t>> seen;
    std::vector<Subset> out;
    std::vector<Subset> queue;
    Subset zero_ideal(n);
    zero_ideal.set(R.zero());
    queue.push_back(zero_ideal);
    seen.insert(zero_ideal.blocks());
    while (!queue.empty()) {
        Subset I = std::move(queue.back());
        queue.pop_back();
        out.push_back(I);
        for (const Subset& P : principals) {
            if (I.contains(P)) continue;
            // sum of two two-sided ideals is their element-wise sumset
            Subset J(n);
            auto im = I.members();
            auto pm = P.members();
            for (Elem a : im) {
                const uint16_t* row = R.add_row(a);
                for (Elem b : pm) J.set(row[b]);
            }
            if (seen.insert(J.blocks()).second) queue.push_back(std::move(J));
        }
    }
    std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) { return a.less_bits(b); });
    return out;
}

bool is_essential_right_ideal(const FiniteRing& R, const Subset& E) {
    if (!is_right_ideal(R, E)) fail(ErrKind::hypothesis, "essentiality test requires a right ideal");
    for (int b = 0; b < R.order(); ++b) {
        if (b == R.zero()) continue;
        const uint16_t* row = R.mul_row(b);
        bool meets = false;
        for (int x = 0; x < R.order(); ++x) {
            Elem u = row[x];
            if (u != R.zero() && E.test(u)) {
                meets = true;
                break;
            }
        }
        if (!meets) return false;
    }
    return true;
}

bool is_essential_left_ideal(const FiniteRing& R, const Subset& E) {
    if (!is_left_ideal(R, E)) fail(ErrKind::hypothesis, "essentiality test requires a left ideal");
    for (int b = 0; b < R.order(); ++b) {
        if (b == R.zero()) continue;
        bool meets = false;
        for (int x = 0; x < R.order(); ++x) {
            Elem u = R.mul(x, b);
            if (u != R.zero() && E.test(u)) {
                meets = true;
                break;
            }
        }
        if (!meets) return false;
    }
    return true;
}

std::string subset_to_string(const FiniteRing& R, const Subset& S) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < R.order(); ++i) {
        if (!S.test(i)) continue;
        if (!first) out += ",";
        first = false;
        out += R.name(i);
    }
    out += "}";
    return out;
}

} // namespace centrum
