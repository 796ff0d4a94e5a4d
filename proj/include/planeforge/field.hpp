#pragma once

#include "planeforge/group.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace planeforge {

struct NotPrimePowerError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_prime(int n);
// (p, k) with n = p^k, when n is a prime power >= 2
std::optional<std::pair<int, int>> prime_power_decomposition(int n);
// monic polynomial over GF(p), coefficients low-to-high
bool is_irreducible(const std::vector<int>& poly, int p);

// GF(p^k) with a fixed monic irreducible modulus. Elements are indexed
// 0..q-1 by the base-p encoding of their coefficient vectors. A separate
// symbol table places the elements onto the permutation symbols 1..q:
// 0 <-> 1 and g^j <-> j+2 for the fixed primitive element g, so the identity
// map still reads 1 2 ... q while the translation tables come out exactly as
// the multiplicative index order dictates.
class FieldSpec {
public:
    static constexpr int kDefaultMaxOrder = 101;

    static FieldSpec make(int p, int k, int max_order = kDefaultMaxOrder);
    static FieldSpec for_order(int n, int max_order = kDefaultMaxOrder);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    int zero() const { return 0; }
    int one() const { return 1; }
    int add(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const; // throws std::domain_error on zero
    int generator() const { return generator_; }

    int symbol(int a) const { return symbol_of_[static_cast<size_t>(a)]; }
    int element_of_symbol(int s) const { return element_of_symbol_[static_cast<size_t>(s - 1)]; }
    std::vector<int> coefficients(int a) const;

private:
    FieldSpec() = default;

    int p_ = 0;
    int k_ = 0;
    int q_ = 0;
    std::vector<int> modulus_;
    std::vector<int> mul_table_;
    std::vector<int> inv_table_;
    std::vector<int> symbol_of_;
    std::vector<int> element_of_symbol_;
    int generator_ = 0;
};

// a single field value; arithmetic requires both operands to come from the
// same FieldSpec instance
struct FieldElement {
    const FieldSpec* field = nullptr;
    int index = 0;

    int symbol() const { return field->symbol(index); }
    bool operator==(const FieldElement& other) const {
        return field == other.field && index == other.index;
    }
};

FieldElement element(const FieldSpec& f, int index);
FieldElement add(FieldElement a, FieldElement b);
FieldElement mul(FieldElement a, FieldElement b);
FieldElement inv(FieldElement a);

// The affine maps x -> a x + b (a nonzero) acting on symbols 1..q: the
// canonical sharply 2-transitive group of degree q and order q(q-1).
struct Agl1 {
    PermSet group;  // all q(q-1) elements, lex-sorted by image row
    Permutation s;  // x -> x + 1
    Permutation t;  // x -> g x
};

Agl1 agl1(const FieldSpec& f);

} // namespace planeforge
