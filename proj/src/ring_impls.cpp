#include <numeric>
#include <sstream>
#include <stdexcept>

#include "polynomial.hpp"
#include "ring_impl.hpp"

namespace unitgraph::detail {

Elem RingImpl::compose(std::span<const Elem>) const {
    throw std::logic_error("compose is not defined for this ring kind");
}

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) out *= base;
    return out;
}

// Digits of x in base `radix`, most significant first.
std::vector<Elem> digits_msf(Elem x, std::size_t radix, std::size_t count) {
    std::vector<Elem> out(count);
    for (std::size_t i = count; i-- > 0;) {
        out[i] = static_cast<Elem>(x % radix);
        x = static_cast<Elem>(x / radix);
    }
    return out;
}

Elem from_digits_msf(std::span<const Elem> digits, std::size_t radix) {
    std::size_t x = 0;
    for (auto d : digits) x = x * radix + d;
    return static_cast<Elem>(x);
}

class ModularImpl final : public RingImpl {
public:
    explicit ModularImpl(std::uint64_t n) : n_(n) {}

    std::size_t order() const override { return n_; }
    Elem add(Elem x, Elem y) const override { return static_cast<Elem>((x + std::uint64_t{y}) % n_); }
    Elem neg(Elem x) const override { return static_cast<Elem>((n_ - x) % n_); }
    Elem mul(Elem x, Elem y) const override {
        return static_cast<Elem>((std::uint64_t{x} * y) % n_);
    }
    Elem one() const override { return 1; }
    bool commutative() const override { return true; }
    std::string label(Elem x) const override { return std::to_string(x); }
    RingKind kind() const override { return RingKind::modular; }

    std::optional<BitSet> structural_units() const override {
        BitSet out(n_);
        for (std::uint64_t x = 1; x < n_; ++x) {
            if (std::gcd(x, n_) == 1) out.set(x);
        }
        return out;
    }

private:
    std::uint64_t n_;
};

class PolynomialImpl final : public RingImpl {
public:
    PolynomialImpl(std::uint64_t n, Poly modulus, bool is_field)
        : n_(n),
          modulus_(std::move(modulus)),
          degree_(static_cast<unsigned>(modulus_.size() - 1)),
          order_(ipow(n_, degree_)),
          is_field_(is_field) {}

    std::size_t order() const override { return order_; }

    Elem add(Elem x, Elem y) const override {
        Elem out = 0;
        std::size_t place = 1;
        for (unsigned i = 0; i < degree_; ++i) {
            out += static_cast<Elem>(((x % n_ + y % n_) % n_) * place);
            x = static_cast<Elem>(x / n_);
            y = static_cast<Elem>(y / n_);
            place *= n_;
        }
        return out;
    }

    Elem neg(Elem x) const override {
        Elem out = 0;
        std::size_t place = 1;
        for (unsigned i = 0; i < degree_; ++i) {
            out += static_cast<Elem>(((n_ - x % n_) % n_) * place);
            x = static_cast<Elem>(x / n_);
            place *= n_;
        }
        return out;
    }

    Elem mul(Elem x, Elem y) const override {
        return encode(poly_mod(poly_mul(decode(x), decode(y), n_), modulus_, n_));
    }

    Elem one() const override { return 1; }
    bool commutative() const override { return true; }
    RingKind kind() const override { return RingKind::polynomial; }
    unsigned dimension() const override { return degree_; }

    std::string label(Elem x) const override { return polynomial_to_string(decode(x)); }

    std::vector<Elem> components(Elem x) const override {
        std::vector<Elem> out(degree_);
        for (unsigned i = 0; i < degree_; ++i) {
            out[i] = static_cast<Elem>(x % n_);
            x = static_cast<Elem>(x / n_);
        }
        return out;
    }

    Elem compose(std::span<const Elem> c) const override {
        if (c.size() != degree_) throw std::invalid_argument("wrong number of coefficients");
        Poly p(c.begin(), c.end());
        for (auto& v : p) v %= n_;
        return encode(p);
    }

    std::optional<BitSet> structural_units() const override {
        if (!is_field_) return std::nullopt;
        BitSet out(order_, true);
        out.reset(0);
        return out;
    }

private:
    Poly decode(Elem x) const {
        Poly out(degree_);
        for (unsigned i = 0; i < degree_; ++i) {
            out[i] = x % n_;
            x = static_cast<Elem>(x / n_);
        }
        return out;
    }

    Elem encode(const Poly& p) const {
        std::size_t x = 0;
        for (std::size_t i = std::min<std::size_t>(p.size(), degree_); i-- > 0;) x = x * n_ + p[i];
        return static_cast<Elem>(x);
    }

    std::uint64_t n_;
    Poly modulus_;
    unsigned degree_;
    std::size_t order_;
    bool is_field_;
};

class MatrixImpl final : public RingImpl {
public:
    MatrixImpl(FiniteRing base, unsigned size)
        : base_(std::move(base)),
          size_(size),
          cells_(std::size_t{size} * size),
          order_(ipow(base_.order(), cells_)) {}

    std::size_t order() const override { return order_; }

    Elem add(Elem x, Elem y) const override {
        auto a = entries(x);
        const auto b = entries(y);
        for (std::size_t i = 0; i < cells_; ++i) a[i] = base_.add(a[i], b[i]);
        return encode(a);
    }

    Elem neg(Elem x) const override {
        auto a = entries(x);
        for (auto& v : a) v = base_.neg(v);
        return encode(a);
    }

    Elem mul(Elem x, Elem y) const override {
        const auto a = entries(x);
        const auto b = entries(y);
        std::vector<Elem> c(cells_, 0);
        for (unsigned i = 0; i < size_; ++i) {
            for (unsigned j = 0; j < size_; ++j) {
                Elem acc = 0;
                for (unsigned k = 0; k < size_; ++k) {
                    acc = base_.add(acc, base_.mul(a[i * size_ + k], b[k * size_ + j]));
                }
                c[i * size_ + j] = acc;
            }
        }
        return encode(c);
    }

    Elem one() const override {
        std::vector<Elem> c(cells_, 0);
        for (unsigned i = 0; i < size_; ++i) c[i * size_ + i] = base_.one();
        return encode(c);
    }

    bool commutative() const override { return size_ == 1 && base_.is_commutative(); }
    RingKind kind() const override { return RingKind::matrix; }
    unsigned dimension() const override { return size_; }
    std::vector<FiniteRing> parts() const override { return {base_}; }

    std::string label(Elem x) const override {
        const auto a = entries(x);
        std::ostringstream os;
        os << '[';
        for (unsigned i = 0; i < size_; ++i) {
            os << (i == 0 ? "[" : ",[");
            for (unsigned j = 0; j < size_; ++j) {
                if (j != 0) os << ',';
                os << base_.label(a[i * size_ + j]);
            }
            os << ']';
        }
        os << ']';
        return os.str();
    }

    std::vector<Elem> components(Elem x) const override { return entries(x); }

    Elem compose(std::span<const Elem> c) const override {
        if (c.size() != cells_) throw std::invalid_argument("wrong number of matrix entries");
        for (auto v : c) {
            if (v >= base_.order()) throw std::out_of_range("matrix entry out of range");
        }
        return from_digits_msf(c, base_.order());
    }

    std::optional<Elem> determinant(Elem x) const override {
        if (!base_.is_commutative()) return std::nullopt;
        const auto a = entries(x);
        std::vector<unsigned> rows(size_);
        std::iota(rows.begin(), rows.end(), 0U);
        return det(a, rows, 0);
    }

    std::optional<BitSet> structural_units() const override {
        if (!base_.is_commutative()) return std::nullopt;
        BitSet out(order_);
        for (std::size_t x = 0; x < order_; ++x) {
            if (base_.is_unit(*determinant(static_cast<Elem>(x)))) out.set(x);
        }
        return out;
    }

private:
    std::vector<Elem> entries(Elem x) const { return digits_msf(x, base_.order(), cells_); }
    Elem encode(const std::vector<Elem>& c) const { return from_digits_msf(c, base_.order()); }

    // Laplace expansion along column `col` over the remaining rows.
    Elem det(const std::vector<Elem>& a, const std::vector<unsigned>& rows, unsigned col) const {
        if (rows.size() == 1) return a[rows[0] * size_ + col];
        Elem acc = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Elem entry = a[rows[r] * size_ + col];
            if (entry == 0) continue;
            std::vector<unsigned> minor_rows;
            minor_rows.reserve(rows.size() - 1);
            for (std::size_t s = 0; s < rows.size(); ++s) {
                if (s != r) minor_rows.push_back(rows[s]);
            }
            Elem term = base_.mul(entry, det(a, minor_rows, col + 1));
            acc = (r % 2 == 0) ? base_.add(acc, term) : base_.sub(acc, term);
        }
        return acc;
    }

    FiniteRing base_;
    unsigned size_;
    std::size_t cells_;
    std::size_t order_;
};

class ProductImpl final : public RingImpl {
public:
    explicit ProductImpl(std::vector<FiniteRing> factors) : factors_(std::move(factors)) {
        order_ = 1;
        for (const auto& f : factors_) order_ *= f.order();
    }

    std::size_t order() const override { return order_; }

    Elem add(Elem x, Elem y) const override {
        auto a = split(x);
        const auto b = split(y);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = factors_[i].add(a[i], b[i]);
        return join(a);
    }

    Elem neg(Elem x) const override {
        auto a = split(x);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = factors_[i].neg(a[i]);
        return join(a);
    }

    Elem mul(Elem x, Elem y) const override {
        auto a = split(x);
        const auto b = split(y);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = factors_[i].mul(a[i], b[i]);
        return join(a);
    }

    Elem one() const override {
        std::vector<Elem> a;
        for (const auto& f : factors_) a.push_back(f.one());
        return join(a);
    }

    bool commutative() const override {
        for (const auto& f : factors_) {
            if (!f.is_commutative()) return false;
        }
        return true;
    }

    RingKind kind() const override { return RingKind::product; }
    std::vector<FiniteRing> parts() const override { return factors_; }

    std::string label(Elem x) const override {
        const auto a = split(x);
        std::string out = "(";
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i != 0) out += ',';
            out += factors_[i].label(a[i]);
        }
        return out + ')';
    }

    std::vector<Elem> components(Elem x) const override { return split(x); }

    Elem compose(std::span<const Elem> c) const override {
        if (c.size() != factors_.size()) throw std::invalid_argument("wrong number of components");
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] >= factors_[i].order()) throw std::out_of_range("component out of range");
        }
        return join(c);
    }

    std::optional<BitSet> structural_units() const override {
        BitSet out(order_);
        for (std::size_t x = 0; x < order_; ++x) {
            const auto a = split(static_cast<Elem>(x));
            bool unit = true;
            for (std::size_t i = 0; i < a.size() && unit; ++i) unit = factors_[i].is_unit(a[i]);
            if (unit) out.set(x);
        }
        return out;
    }

private:
    std::vector<Elem> split(Elem x) const {
        std::vector<Elem> out(factors_.size());
        for (std::size_t i = factors_.size(); i-- > 0;) {
            out[i] = static_cast<Elem>(x % factors_[i].order());
            x = static_cast<Elem>(x / factors_[i].order());
        }
        return out;
    }

    Elem join(std::span<const Elem> a) const {
        std::size_t x = 0;
        for (std::size_t i = 0; i < a.size(); ++i) x = x * factors_[i].order() + a[i];
        return static_cast<Elem>(x);
    }

    std::vector<FiniteRing> factors_;
    std::size_t order_;
};

class TableImpl final : public RingImpl {
public:
    TableImpl(std::vector<Elem> add_table, std::vector<Elem> mul_table, Elem one,
              std::vector<std::string> labels)
        : add_(std::move(add_table)),
          mul_(std::move(mul_table)),
          labels_(std::move(labels)),
          order_(labels_.size()),
          one_(one) {
        neg_.resize(order_);
        for (std::size_t x = 0; x < order_; ++x) {
            for (std::size_t y = 0; y < order_; ++y) {
                if (add_[x * order_ + y] == 0) {
                    neg_[x] = static_cast<Elem>(y);
                    break;
                }
            }
        }
        commutative_ = true;
        for (std::size_t x = 0; x < order_ && commutative_; ++x) {
            for (std::size_t y = x + 1; y < order_; ++y) {
                if (mul_[x * order_ + y] != mul_[y * order_ + x]) {
                    commutative_ = false;
                    break;
                }
            }
        }
    }

    std::size_t order() const override { return order_; }
    Elem add(Elem x, Elem y) const override { return add_[x * order_ + y]; }
    Elem neg(Elem x) const override { return neg_[x]; }
    Elem mul(Elem x, Elem y) const override { return mul_[x * order_ + y]; }
    Elem one() const override { return one_; }
    bool commutative() const override { return commutative_; }
    std::string label(Elem x) const override { return labels_[x]; }
    RingKind kind() const override { return RingKind::table; }

private:
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    std::vector<std::string> labels_;
    std::size_t order_;
    Elem one_;
    bool commutative_ = true;
};

}  // namespace

std::unique_ptr<RingImpl> make_modular(std::uint64_t n) { return std::make_unique<ModularImpl>(n); }

std::unique_ptr<RingImpl> make_polynomial(std::uint64_t n, std::vector<std::uint64_t> modulus,
                                          bool is_field) {
    return std::make_unique<PolynomialImpl>(n, std::move(modulus), is_field);
}

std::unique_ptr<RingImpl> make_matrix(FiniteRing base, unsigned size) {
    return std::make_unique<MatrixImpl>(std::move(base), size);
}

std::unique_ptr<RingImpl> make_product(std::vector<FiniteRing> factors) {
    return std::make_unique<ProductImpl>(std::move(factors));
}

std::unique_ptr<RingImpl> make_table(std::vector<Elem> add_table, std::vector<Elem> mul_table,
                                     Elem one, std::vector<std::string> labels) {
    return std::make_unique<TableImpl>(std::move(add_table), std::move(mul_table), one,
                                       std::move(labels));
}

}  // namespace unitgraph::detail
