#include "mod3/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mod3 {

int Monomial::degree() const {
    int d = static_cast<int>(exterior.size());
    for (const auto& [id, exp] : powers)
        d += 2 * static_cast<int>(exp);
    return d;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    if (auto c = degree() <=> o.degree(); c != 0)
        return c;
    if (auto c = exterior <=> o.exterior; c != 0)
        return c;
    return powers <=> o.powers;
}

bool Element::is_homogeneous() const {
    if (terms.empty())
        return true;
    int d = terms.begin()->first.degree();
    for (const auto& [m, c] : terms)
        if (m.degree() != d)
            return false;
    return true;
}

int Element::degree() const {
    if (terms.empty())
        throw DegreeMismatchError("degree of the zero element is undefined");
    if (!is_homogeneous())
        throw DegreeMismatchError("element is not homogeneous");
    return terms.begin()->first.degree();
}

void Element::add_term(const Monomial& m, F3 c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

Element Element::monomial(const Monomial& m, F3 c) {
    Element e;
    e.add_term(m, c);
    return e;
}

Element Element::from_terms(const std::vector<std::pair<Monomial, long long>>& raw) {
    Element e;
    for (const auto& [m, c] : raw)
        e.add_term(m, F3(c));
    return e;
}

const GeneratorSpec& SpacePresentation::generator(GeneratorId g) const {
    if (g >= generators.size())
        throw PresentationMismatchError("generator id " + std::to_string(g) +
                                        " not in presentation of size " +
                                        std::to_string(generators.size()));
    return generators[g];
}

std::optional<GeneratorId> SpacePresentation::find(std::string_view name) const {
    for (const auto& g : generators)
        if (g.name == name)
            return g.id;
    return std::nullopt;
}

void SpacePresentation::validate() const {
    if (degree_cap < 2)
        throw InvalidArgumentError("degree_cap must be >= 2");
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const GeneratorSpec& g = generators[i];
        if (g.id != i)
            throw InvalidArgumentError("generator '" + g.name + "' has id " +
                                       std::to_string(g.id) + ", expected " + std::to_string(i));
        if (g.degree != 1 && g.degree != 2)
            throw InvalidArgumentError("generator '" + g.name + "' has degree " +
                                       std::to_string(g.degree) + "; only 1 and 2 are supported");
        auto check_image = [&](const Element& img, int expected_degree, const char* what) {
            if (img.is_zero())
                return;
            check_element(img, *this);
            if (!img.is_homogeneous() || img.degree() != expected_degree)
                throw InvalidArgumentError(std::string(what) + " of generator '" + g.name +
                                           "' is not homogeneous of degree " +
                                           std::to_string(expected_degree));
        };
        check_image(g.beta_image, g.degree + 1, "beta image");
        check_image(g.p1_image, g.degree + 4, "p1 image");
        if (g.integral_lift && !g.beta_image.is_zero())
            throw InvalidArgumentError("generator '" + g.name +
                                       "' lifts integrally but has a non-zero Bockstein image");
    }
}

void check_element(const Element& a, const SpacePresentation& P) {
    for (const auto& [m, c] : a.terms) {
        for (GeneratorId g : m.exterior)
            if (P.generator(g).degree != 1)
                throw PresentationMismatchError("generator '" + P.generator(g).name +
                                                "' used as an exterior factor but has degree 2");
        for (const auto& [g, exp] : m.powers)
            if (P.generator(g).degree != 2)
                throw PresentationMismatchError("generator '" + P.generator(g).name +
                                                "' used as a polynomial factor but has degree 1");
    }
}

Element add(const Element& a, const Element& b) {
    Element r = a;
    for (const auto& [m, c] : b.terms)
        r.add_term(m, c);
    return r;
}

Element sub(const Element& a, const Element& b) {
    Element r = a;
    for (const auto& [m, c] : b.terms)
        r.add_term(m, -c);
    return r;
}

Element scale(F3 c, const Element& a) {
    Element r;
    if (c.is_zero())
        return r;
    for (const auto& [m, cm] : a.terms)
        r.add_term(m, c * cm);
    return r;
}

namespace {

// Merges two strictly increasing exterior lists; returns false if they share
// a generator (the product vanishes). `negative` receives the parity of the
// merge permutation of the odd factors.
bool merge_exterior(const std::vector<GeneratorId>& x, const std::vector<GeneratorId>& y,
                    std::vector<GeneratorId>& out, bool& negative) {
    out.clear();
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    std::size_t inversions = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] == y[j])
            return false;
        if (x[i] < y[j]) {
            out.push_back(x[i++]);
        } else {
            // y[j] jumps over the remaining factors of x, all of odd degree
            inversions += x.size() - i;
            out.push_back(y[j++]);
        }
    }
    out.insert(out.end(), x.begin() + i, x.end());
    out.insert(out.end(), y.begin() + j, y.end());
    negative = (inversions % 2) != 0;
    return true;
}

std::vector<std::pair<GeneratorId, std::uint32_t>> merge_powers(
    const std::vector<std::pair<GeneratorId, std::uint32_t>>& x,
    const std::vector<std::pair<GeneratorId, std::uint32_t>>& y) {
    std::vector<std::pair<GeneratorId, std::uint32_t>> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i].first == y[j].first) {
            out.emplace_back(x[i].first, x[i].second + y[j].second);
            ++i, ++j;
        } else if (x[i].first < y[j].first) {
            out.push_back(x[i++]);
        } else {
            out.push_back(y[j++]);
        }
    }
    out.insert(out.end(), x.begin() + i, x.end());
    out.insert(out.end(), y.begin() + j, y.end());
    return out;
}

}  // namespace

Element mul(const Element& a, const Element& b, const SpacePresentation& P) {
    check_element(a, P);
    check_element(b, P);
    Element r;
    std::vector<GeneratorId> merged;
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            bool negative = false;
            if (!merge_exterior(ma.exterior, mb.exterior, merged, negative))
                continue;
            Monomial m;
            m.exterior = merged;
            m.powers = merge_powers(ma.powers, mb.powers);
            if (m.degree() > P.degree_cap)
                continue;
            F3 c = ca * cb;
            r.add_term(m, negative ? -c : c);
        }
    }
    return r;
}

Element truncate(const Element& a, int cap) {
    Element r;
    for (const auto& [m, c] : a.terms)
        if (m.degree() <= cap)
            r.add_term(m, c);
    return r;
}

Element generator_element(const SpacePresentation& P, GeneratorId g) {
    const GeneratorSpec& spec = P.generator(g);
    return spec.degree == 1 ? Element::monomial(Monomial::exterior_gen(g))
                            : Element::monomial(Monomial::poly_power(g, 1));
}

std::vector<Monomial> basis(const SpacePresentation& P, int k) {
    if (k < 0 || k > P.degree_cap)
        throw OutOfRangeError("basis degree " + std::to_string(k) + " outside [0, " +
                              std::to_string(P.degree_cap) + "]");
    std::vector<GeneratorId> odd_ids, even_ids;
    for (const auto& g : P.generators)
        (g.degree == 1 ? odd_ids : even_ids).push_back(g.id);

    std::vector<Monomial> out;
    std::vector<GeneratorId> chosen;

    // Distributes total exponent t over even_ids[from..], appending each
    // completed monomial.
    std::function<void(std::size_t, int, Monomial&)> spread_powers =
        [&](std::size_t from, int t, Monomial& m) {
            if (t == 0) {
                out.push_back(m);
                return;
            }
            if (from == even_ids.size())
                return;
            for (int e = 0; e <= t; ++e) {
                if (e > 0)
                    m.powers.emplace_back(even_ids[from], static_cast<std::uint32_t>(e));
                spread_powers(from + 1, t - e, m);
                if (e > 0)
                    m.powers.pop_back();
            }
        };

    std::function<void(std::size_t, int)> choose_exterior = [&](std::size_t from, int r) {
        if (r == 0) {
            Monomial m;
            m.exterior = chosen;
            int t = (k - static_cast<int>(chosen.size())) / 2;
            spread_powers(0, t, m);
            return;
        }
        for (std::size_t i = from; i + r <= odd_ids.size(); ++i) {
            chosen.push_back(odd_ids[i]);
            choose_exterior(i + 1, r - 1);
            chosen.pop_back();
        }
    };

    int max_r = std::min<int>(static_cast<int>(odd_ids.size()), k);
    for (int r = k % 2; r <= max_r; r += 2)
        choose_exterior(0, r);

    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> hilbert_coefficients(int deg1_count, int deg2_count, int max_degree) {
    if (deg1_count < 0 || deg2_count < 0 || max_degree < 0)
        throw InvalidArgumentError("hilbert_coefficients needs non-negative arguments");
    std::vector<long long> c(static_cast<std::size_t>(max_degree) + 1, 0);
    c[0] = 1;
    for (int g = 0; g < deg1_count; ++g)
        for (int k = max_degree; k >= 1; --k)
            c[k] += c[k - 1];
    // 1/(1-t^2) is the running sum with stride 2
    for (int g = 0; g < deg2_count; ++g)
        for (int k = 2; k <= max_degree; ++k)
            c[k] += c[k - 2];
    return c;
}

Element random_element(const SpacePresentation& P, int degree, std::mt19937_64& rng) {
    Element e;
    std::uniform_int_distribution<int> coeff(0, 2);
    for (const Monomial& m : basis(P, degree))
        e.add_term(m, F3(coeff(rng)));
    return e;
}

std::string to_string(const Monomial& m, const SpacePresentation& P) {
    if (m.is_unit())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (GeneratorId g : m.exterior) {
        if (!first)
            os << '*';
        os << P.generator(g).name;
        first = false;
    }
    for (const auto& [g, exp] : m.powers) {
        if (!first)
            os << '*';
        os << P.generator(g).name;
        if (exp > 1)
            os << '^' << exp;
        first = false;
    }
    return os.str();
}

std::string to_string(const Element& a, const SpacePresentation& P) {
    if (a.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : a.terms) {
        if (!first)
            os << " + ";
        first = false;
        if (m.is_unit())
            os << static_cast<int>(c.value());
        else if (c.value() != 1)
            os << static_cast<int>(c.value()) << '*' << to_string(m, P);
        else
            os << to_string(m, P);
    }
    return os.str();
}

}  // namespace mod3
