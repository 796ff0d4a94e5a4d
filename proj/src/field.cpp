#include "planeforge/field.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace planeforge {
namespace {

std::vector<int> digits_of(int value, int p, int k) {
    std::vector<int> digits(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        digits[static_cast<size_t>(i)] = value % p;
        value /= p;
    }
    return digits;
}

int encode_digits(const std::vector<int>& digits, int p) {
    int value = 0;
    for (size_t i = digits.size(); i-- > 0;) {
        value = value * p + digits[i];
    }
    return value;
}

// product of two coefficient vectors, reduced modulo the monic modulus
std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& modulus, int p) {
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        }
    }
    const size_t deg = modulus.size() - 1;
    for (size_t i = prod.size(); i-- > deg;) {
        const int coeff = prod[i];
        if (coeff == 0) continue;
        prod[i] = 0;
        for (size_t j = 0; j < deg; ++j) {
            prod[i - deg + j] = ((prod[i - deg + j] - coeff * modulus[j]) % p + p * p) % p;
        }
    }
    prod.resize(deg);
    return prod;
}

// remainder of a by b over GF(p); b monic
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
    const size_t db = b.size() - 1;
    while (a.size() > db) {
        const int coeff = a.back();
        if (coeff != 0) {
            for (size_t j = 0; j < db; ++j) {
                const size_t pos = a.size() - 1 - db + j;
                a[pos] = ((a[pos] - coeff * b[j]) % p + p * p) % p;
            }
        }
        a.pop_back();
    }
    return a;
}

bool poly_is_zero(const std::vector<int>& a) {
    return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

// fixed moduli for the small orders whose tables downstream code pins
// (coefficients low-to-high, leading term included)
const std::map<int, std::vector<int>>& fixed_moduli() {
    static const std::map<int, std::vector<int>> table = {
        {4, {1, 1, 1}},        // x^2 + x + 1
        {8, {1, 1, 0, 1}},     // x^3 + x + 1
        {9, {1, 0, 1}},        // x^2 + 1
        {16, {1, 1, 0, 0, 1}}, // x^4 + x + 1
        {25, {1, 1, 1}},       // x^2 + x + 1
    };
    return table;
}

// fixed primitive elements; every other order takes the least primitive
// element in coefficient-encoding order. GF(5) is pinned to 3 so that the
// generator relations t^-1 s t = s^2 and the order-5 translation tables come
// out in their reference form.
const std::map<int, int>& fixed_generators() {
    static const std::map<int, int> table = {
        {5, 3},
    };
    return table;
}

} // namespace

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::optional<std::pair<int, int>> prime_power_decomposition(int n) {
    if (n < 2) return std::nullopt;
    int p = n;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    int k = 0;
    int rest = n;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, k);
}

bool is_irreducible(const std::vector<int>& poly, int p) {
    if (poly.size() < 2 || poly.back() != 1) {
        throw std::invalid_argument("is_irreducible: polynomial must be monic of degree >= 1");
    }
    const int k = static_cast<int>(poly.size()) - 1;
    if (k == 1) return true;
    // trial division by every monic polynomial of degree 1..k/2
    for (int d = 1; 2 * d <= k; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int enc = 0; enc < count; ++enc) {
            std::vector<int> divisor = digits_of(enc, p, d);
            divisor.push_back(1);
            if (poly_is_zero(poly_rem(poly, divisor, p))) return false;
        }
    }
    return true;
}

FieldSpec FieldSpec::make(int p, int k, int max_order) {
    if (!is_prime(p)) {
        throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                    " is not prime");
    }
    if (k < 1) {
        throw std::invalid_argument("field extension degree must be at least 1");
    }
    long long order = 1;
    for (int i = 0; i < k; ++i) {
        order *= p;
        if (order > max_order) {
            throw std::invalid_argument("field order exceeds the configured bound " +
                                        std::to_string(max_order));
        }
    }

    FieldSpec f;
    f.p_ = p;
    f.k_ = k;
    f.q_ = static_cast<int>(order);

    if (k == 1) {
        f.modulus_ = {0, 1}; // x; reduction never fires for degree-0 elements
    } else if (auto it = fixed_moduli().find(f.q_); it != fixed_moduli().end()) {
        f.modulus_ = it->second;
    } else {
        // lexicographically least irreducible monic polynomial, scanning the
        // base-p encodings of the non-leading coefficients
        f.modulus_.clear();
        for (int enc = 0; enc < f.q_; ++enc) {
            std::vector<int> candidate = digits_of(enc, p, k);
            candidate.push_back(1);
            if (is_irreducible(candidate, p)) {
                f.modulus_ = candidate;
                break;
            }
        }
    }
    if (static_cast<int>(f.modulus_.size()) != k + 1 || !is_irreducible(f.modulus_, p)) {
        throw std::logic_error("field modulus is not a monic irreducible of degree k");
    }

    const int q = f.q_;
    f.mul_table_.assign(static_cast<size_t>(q) * static_cast<size_t>(q), 0);
    for (int a = 0; a < q; ++a) {
        const std::vector<int> da = digits_of(a, p, k);
        for (int b = a; b < q; ++b) {
            const std::vector<int> db = digits_of(b, p, k);
            const int prod = encode_digits(poly_mul_mod(da, db, f.modulus_, p), p);
            f.mul_table_[static_cast<size_t>(a) * q + b] = prod;
            f.mul_table_[static_cast<size_t>(b) * q + a] = prod;
        }
    }

    f.inv_table_.assign(static_cast<size_t>(q), 0);
    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b) {
            if (f.mul_table_[static_cast<size_t>(a) * q + b] == 1) {
                f.inv_table_[static_cast<size_t>(a)] = b;
                break;
            }
        }
        if (f.inv_table_[static_cast<size_t>(a)] == 0) {
            throw std::logic_error("element without inverse; modulus is reducible");
        }
    }

    if (auto it = fixed_generators().find(q); it != fixed_generators().end()) {
        f.generator_ = it->second;
    } else {
        for (int a = 1; a < q && f.generator_ == 0; ++a) {
            int power = a;
            int order_of_a = 1;
            while (power != 1) {
                power = f.mul_table_[static_cast<size_t>(power) * q + a];
                ++order_of_a;
            }
            if (order_of_a == q - 1) f.generator_ = a;
        }
    }
    if (f.generator_ == 0 && q > 1) throw std::logic_error("no primitive element found");

    f.symbol_of_.assign(static_cast<size_t>(q), 0);
    f.element_of_symbol_.assign(static_cast<size_t>(q), 0);
    f.symbol_of_[0] = 1;
    f.element_of_symbol_[0] = 0;
    int power = 1;
    for (int j = 0; j < q - 1; ++j) {
        if (f.symbol_of_[static_cast<size_t>(power)] != 0) {
            throw std::logic_error("generator is not primitive");
        }
        f.symbol_of_[static_cast<size_t>(power)] = j + 2;
        f.element_of_symbol_[static_cast<size_t>(j + 1)] = power;
        power = f.mul_table_[static_cast<size_t>(power) * q + f.generator_];
    }
    return f;
}

FieldSpec FieldSpec::for_order(int n, int max_order) {
    const auto pk = prime_power_decomposition(n);
    if (!pk) {
        throw NotPrimePowerError("order " + std::to_string(n) + " is not a prime power");
    }
    return make(pk->first, pk->second, max_order);
}

int FieldSpec::add(int a, int b) const {
    const std::vector<int> da = digits_of(a, p_, k_);
    const std::vector<int> db = digits_of(b, p_, k_);
    std::vector<int> sum(static_cast<size_t>(k_));
    for (int i = 0; i < k_; ++i) {
        sum[static_cast<size_t>(i)] =
            (da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) % p_;
    }
    return encode_digits(sum, p_);
}

int FieldSpec::neg(int a) const {
    std::vector<int> da = digits_of(a, p_, k_);
    for (int& c : da) c = (p_ - c) % p_;
    return encode_digits(da, p_);
}

int FieldSpec::mul(int a, int b) const {
    return mul_table_[static_cast<size_t>(a) * static_cast<size_t>(q_) +
                      static_cast<size_t>(b)];
}

int FieldSpec::inv(int a) const {
    if (a == 0) throw std::domain_error("inverse of the zero element");
    return inv_table_[static_cast<size_t>(a)];
}

std::vector<int> FieldSpec::coefficients(int a) const { return digits_of(a, p_, k_); }

FieldElement element(const FieldSpec& f, int index) {
    if (index < 0 || index >= f.q()) {
        throw std::invalid_argument("field element index out of range");
    }
    return FieldElement{&f, index};
}

namespace {
void require_same_field(FieldElement a, FieldElement b) {
    if (a.field != b.field) {
        throw std::invalid_argument("field elements belong to different fields");
    }
}

Permutation affine_permutation(const FieldSpec& f, int a, int b) {
    std::vector<int> images(static_cast<size_t>(f.q()));
    for (int s = 1; s <= f.q(); ++s) {
        const int x = f.element_of_symbol(s);
        images[static_cast<size_t>(s - 1)] = f.symbol(f.add(f.mul(a, x), b));
    }
    return Permutation(std::move(images));
}
} // namespace

FieldElement add(FieldElement a, FieldElement b) {
    require_same_field(a, b);
    return FieldElement{a.field, a.field->add(a.index, b.index)};
}

FieldElement mul(FieldElement a, FieldElement b) {
    require_same_field(a, b);
    return FieldElement{a.field, a.field->mul(a.index, b.index)};
}

FieldElement inv(FieldElement a) { return FieldElement{a.field, a.field->inv(a.index)}; }

Agl1 agl1(const FieldSpec& f) {
    std::vector<Permutation> elems;
    elems.reserve(static_cast<size_t>(f.q()) * static_cast<size_t>(f.q() - 1));
    for (int a = 1; a < f.q(); ++a) {
        for (int b = 0; b < f.q(); ++b) {
            elems.push_back(affine_permutation(f, a, b));
        }
    }
    std::sort(elems.begin(), elems.end());
    return Agl1{
        PermSet(f.q(), std::move(elems)),
        affine_permutation(f, 1, 1),
        affine_permutation(f, f.generator(), 0),
    };
}

} // namespace planeforge
