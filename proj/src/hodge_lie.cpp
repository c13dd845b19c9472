#include "hodgecheck/hodge_lie.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace hodgecheck {

namespace {

std::uint64_t choose2(std::uint64_t n) {
    return n * (n - (n > 0 ? 1 : 0)) / 2;
}

}  // namespace

HodgeVector::HodgeVector(int weight, std::vector<std::uint64_t> numbers)
    : weight_(weight), numbers_(std::move(numbers)) {
    if (numbers_.empty()) throw std::invalid_argument("Hodge vector needs at least one entry");
    const auto len = static_cast<int>(numbers_.size());
    if ((weight_ + len - 1) % 2 != 0) {
        throw std::invalid_argument("Hodge vector of weight " + std::to_string(weight_) + " cannot have " +
                                    std::to_string(len) + " entries");
    }
    for (std::size_t i = 0; i < numbers_.size(); ++i) {
        if (numbers_[i] != numbers_[numbers_.size() - 1 - i]) {
            throw std::invalid_argument("Hodge numbers must satisfy h^{p,q} = h^{q,p}");
        }
    }
}

int HodgeVector::top_p() const noexcept {
    return (weight_ + static_cast<int>(numbers_.size()) - 1) / 2;
}

std::uint64_t HodgeVector::h(int p) const {
    const int idx = top_p() - p;
    if (idx < 0 || idx >= static_cast<int>(numbers_.size())) return 0;
    return numbers_[static_cast<std::size_t>(idx)];
}

std::uint64_t HodgeVector::dimension() const {
    return std::accumulate(numbers_.begin(), numbers_.end(), std::uint64_t{0});
}

HodgeVector hodge_convolve(const HodgeVector& x, const HodgeVector& y) {
    const auto& a = x.numbers();
    const auto& b = y.numbers();
    std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return HodgeVector(x.weight() + y.weight(), std::move(out));
}

HodgeVector hodge_dual(const HodgeVector& x) {
    // palindromic, so reflecting p -> -p leaves the list unchanged
    return HodgeVector(-x.weight(), x.numbers());
}

namespace {

HodgeVector square(const HodgeVector& x, bool symmetric) {
    const auto& a = x.numbers();
    std::vector<std::uint64_t> out(2 * a.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[2 * i] += symmetric ? choose2(a[i] + 1) : choose2(a[i]);
        for (std::size_t j = i + 1; j < a.size(); ++j) out[i + j] += a[i] * a[j];
    }
    return HodgeVector(2 * x.weight(), std::move(out));
}

}  // namespace

HodgeVector sym2_hodge(const HodgeVector& x) {
    return square(x, true);
}

HodgeVector wedge2_hodge(const HodgeVector& x) {
    return square(x, false);
}

std::string_view to_string(PolarizationGroup g) {
    return g == PolarizationGroup::symplectic ? "symplectic" : "orthogonal";
}

LieHodgeDims lie_hodge_dims(const HodgeVector& v, PolarizationGroup group) {
    const bool odd = v.weight() % 2 != 0;
    if (group == PolarizationGroup::symplectic && !odd) {
        throw std::invalid_argument("symplectic polarization needs odd weight");
    }
    if (group == PolarizationGroup::orthogonal && odd) {
        throw std::invalid_argument("orthogonal polarization needs even weight");
    }
    const HodgeVector adj = group == PolarizationGroup::symplectic ? sym2_hodge(v) : wedge2_hodge(v);
    // adj has weight 2w; the class h^{p, 2w-p} lands in g^{p-w, w-p}
    LieHodgeDims out;
    const int top = adj.top_p();
    const int shift = v.weight();
    for (std::size_t idx = 0; idx < adj.numbers().size(); ++idx) {
        const int p = top - static_cast<int>(idx);
        // key r means dim g^{-r,r}
        out[shift - p] = adj.numbers()[idx];
    }
    return out;
}

std::uint64_t dim_horizontal(const LieHodgeDims& d) {
    auto it = d.find(1);
    return it == d.end() ? 0 : it->second;
}

std::uint64_t dim_domain(const LieHodgeDims& d) {
    std::uint64_t sum = 0;
    for (const auto& [p, n] : d) {
        if (p >= 1) sum += n;
    }
    return sum;
}

bool is_hermitian_type(const LieHodgeDims& d) {
    for (const auto& [p, n] : d) {
        if ((p >= 2 || p <= -2) && n != 0) return false;
    }
    return true;
}

std::string_view to_string(HermitianFamilyKind k) {
    switch (k) {
        case HermitianFamilyKind::sp: return "sp";
        case HermitianFamilyKind::su: return "su";
        case HermitianFamilyKind::so2n: return "so2";
        case HermitianFamilyKind::so_star: return "so_star";
    }
    return "?";
}

HermitianFamilyKind parse_family(std::string_view name) {
    if (name == "sp" || name == "sp(2g)") return HermitianFamilyKind::sp;
    if (name == "su" || name == "su(p,q)") return HermitianFamilyKind::su;
    if (name == "so2" || name == "so(2,n)") return HermitianFamilyKind::so2n;
    if (name == "so_star" || name == "so_star(2n)") return HermitianFamilyKind::so_star;
    throw std::invalid_argument("unsupported Hermitian family \"" + std::string(name) + "\"");
}

std::uint64_t hermitian_dim(const HermitianFamily& f) {
    auto need = [&](std::size_t n) {
        if (f.params.size() != n) {
            throw std::invalid_argument(std::string(to_string(f.kind)) + " takes " + std::to_string(n) +
                                        " parameter(s)");
        }
    };
    switch (f.kind) {
        case HermitianFamilyKind::sp: {
            need(1);
            const auto g = f.params[0];
            if (g < 1) throw std::invalid_argument("sp(2g) needs g >= 1");
            return g * (g + 1) / 2;
        }
        case HermitianFamilyKind::su: {
            need(2);
            if (f.params[0] < 1 || f.params[1] < 1) throw std::invalid_argument("su(p,q) needs p, q >= 1");
            return f.params[0] * f.params[1];
        }
        case HermitianFamilyKind::so2n: {
            need(1);
            if (f.params[0] < 1) throw std::invalid_argument("so(2,n) needs n >= 1");
            return f.params[0];
        }
        case HermitianFamilyKind::so_star: {
            need(1);
            const auto n = f.params[0];
            if (n < 2) throw std::invalid_argument("so*(2n) needs n >= 2");
            return n * (n - 1) / 2;
        }
    }
    throw std::invalid_argument("unknown Hermitian family");
}

std::string_view to_string(LieStatus s) {
    switch (s) {
        case LieStatus::lie_equality: return "lie_equality";
        case LieStatus::lie_fails: return "lie_fails";
        case LieStatus::inconsistent: return "inconsistent";
    }
    return "?";
}

LieStatus check_lie(std::uint64_t dim_hk, std::uint64_t dim_y) {
    if (dim_hk == dim_y) return LieStatus::lie_equality;
    return dim_hk > dim_y ? LieStatus::lie_fails : LieStatus::inconsistent;
}

}  // namespace hodgecheck
