#include "sheets/ab_diagram.hpp"

#include "sheets/epsilon.hpp"
#include "sheets/linalg.hpp"

#include <algorithm>
#include <set>

namespace sheets {

namespace {

bool alternates(const std::string& row)
{
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (row[k] != 'a' && row[k] != 'b') {
            return false;
        }
        if (k > 0 && row[k] == row[k - 1]) {
            return false;
        }
    }
    return true;
}

bool canonical_less(const std::string& x, const std::string& y)
{
    if (x.size() != y.size()) {
        return x.size() > y.size();
    }
    return x < y;
}

}  // namespace

ABDiagram::ABDiagram(std::vector<std::string> rows)
    : rows_(std::move(rows))
{
    for (const auto& row : rows_) {
        if (row.empty() || !alternates(row)) {
            throw std::invalid_argument("ab-diagram row '" + row + "' must be a nonempty alternating string over {a,b}");
        }
    }
    std::sort(rows_.begin(), rows_.end(), canonical_less);
}

ABDiagram ABDiagram::parse(std::string_view text)
{
    std::vector<std::string> rows;
    if (text.empty()) {
        return ABDiagram{};
    }
    while (true) {
        auto slash = text.find('/');
        rows.emplace_back(text.substr(0, slash));
        if (slash == std::string_view::npos) {
            break;
        }
        text.remove_prefix(slash + 1);
    }
    return ABDiagram(std::move(rows));
}

Partition ABDiagram::shape() const
{
    std::vector<std::size_t> parts;
    for (const auto& row : rows_) {
        parts.push_back(row.size());
    }
    return Partition(std::move(parts));
}

std::size_t ABDiagram::count(Label label) const
{
    std::size_t n = 0;
    for (const auto& row : rows_) {
        n += static_cast<std::size_t>(std::count(row.begin(), row.end(), static_cast<char>(label)));
    }
    return n;
}

std::string ABDiagram::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        out += (i == 0 ? "" : "/") + rows_[i];
    }
    return out;
}

std::string alternating_row(Label first, std::size_t length)
{
    std::string row;
    Label l = first;
    for (std::size_t k = 0; k < length; ++k) {
        row.push_back(static_cast<char>(l));
        l = flip(l);
    }
    return row;
}

ABDiagram delta_of_phi(const Partition& lambda, const LabelSequence& phi)
{
    if (phi.size() != lambda.length()) {
        throw DimensionError("phi has " + std::to_string(phi.size()) + " labels but " + lambda.to_string() +
                             " has " + std::to_string(lambda.length()) + " parts");
    }
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        rows.push_back(alternating_row(phi[i], lambda.parts()[i]));
    }
    return ABDiagram(std::move(rows));
}

Signature signature_of_phi(const Partition& lambda, const LabelSequence& phi)
{
    if (phi.size() != lambda.length()) {
        throw DimensionError("phi length does not match the number of parts");
    }
    Signature s;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        const std::size_t li = lambda.parts()[i];
        s.n_a += phi[i] == Label::a ? (li + 1) / 2 : li / 2;
    }
    s.n_b = lambda.size() - s.n_a;
    return s;
}

bool is_admissible(const ABDiagram& d, std::size_t n_a, std::size_t n_b)
{
    return d.count(Label::a) == n_a && d.count(Label::b) == n_b;
}

std::vector<ABDiagram> enumerate_admissible(const Partition& lambda, std::size_t n_a, std::size_t n_b)
{
    std::set<ABDiagram> found;
    const std::size_t delta = lambda.length();
    LabelSequence psi(delta, Label::a);
    for (unsigned long mask = 0; mask < (1UL << delta); ++mask) {
        for (std::size_t i = 0; i < delta; ++i) {
            psi[i] = (mask >> i) & 1UL ? Label::b : Label::a;
        }
        auto d = delta_of_phi(lambda, psi);
        if (is_admissible(d, n_a, n_b)) {
            found.insert(std::move(d));
        }
    }
    return {found.begin(), found.end()};
}

namespace {

Vector project(const Involution& inv, const Vector& v, Label grade)
{
    Vector out = v;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (inv.label_of(k) != grade) {
            out[k] = 0;
        }
    }
    return out;
}

std::size_t span_rank(const std::vector<Vector>& vectors, std::size_t dim)
{
    if (vectors.empty()) {
        return 0;
    }
    return rank(RatMatrix::from_columns(vectors, dim));
}

Label grade_of(const Involution& inv, const Vector& v)
{
    bool has_a = false;
    bool has_b = false;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (sgn(v[k]) != 0) {
            (inv.label_of(k) == Label::a ? has_a : has_b) = true;
        }
    }
    if (has_a == has_b) {
        throw InternalInconsistency("Jordan string vector is not homogeneous for V_a + V_b");
    }
    return has_a ? Label::a : Label::b;
}

}  // namespace

ABDiagram gamma_of_nilpotent(const Involution& inv, const RatMatrix& x)
{
    if (inv.kind() != PairType::AIII) {
        throw std::invalid_argument("ab-diagrams classify nilpotent K-orbits for AIII involutions only");
    }
    if (!x.is_square() || x.rows() != inv.dimension()) {
        throw DimensionError("gamma_of_nilpotent: matrix size does not match the involution");
    }
    if (!is_nilpotent(x)) {
        throw std::invalid_argument("gamma_of_nilpotent: matrix is not nilpotent");
    }
    if (!in_p(inv, x)) {
        throw std::invalid_argument("gamma_of_nilpotent: matrix is not in p (theta(x) != -x)");
    }
    const std::size_t n = x.rows();

    // kernels[k] spans ker x^k, up to the nilpotency index.
    std::vector<std::vector<Vector>> kernels{{}};
    RatMatrix power = RatMatrix::identity(n);
    while (kernels.back().size() < n) {
        power = power * x;
        kernels.push_back(kernel_basis(power));
    }
    const std::size_t height = kernels.size() - 1;
    kernels.push_back(kernels.back());

    std::vector<std::string> rows;
    std::vector<Vector> all_vectors;
    for (std::size_t k = height; k >= 1; --k) {
        // Generators of length-k strings complement ker x^{k-1} + x ker x^{k+1}
        // inside ker x^k. All three spaces are graded since x swaps V_a, V_b.
        std::vector<Vector> lower = kernels[k - 1];
        for (const auto& v : kernels[k + 1]) {
            lower.push_back(x * v);
        }
        for (Label grade : {Label::a, Label::b}) {
            std::vector<Vector> span;
            for (const auto& v : lower) {
                span.push_back(project(inv, v, grade));
            }
            std::size_t current = span_rank(span, n);
            for (const auto& v : kernels[k]) {
                Vector candidate = project(inv, v, grade);
                span.push_back(candidate);
                const std::size_t next = span_rank(span, n);
                if (next == current) {
                    span.pop_back();
                    continue;
                }
                current = next;
                std::string row;
                Vector s = candidate;
                for (std::size_t step = 0; step < k; ++step) {
                    row.push_back(static_cast<char>(grade_of(inv, s)));
                    all_vectors.push_back(s);
                    s = x * s;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    if (all_vectors.size() != n || span_rank(all_vectors, n) != n) {
        throw InternalInconsistency("homogeneous Jordan strings do not form a basis");
    }
    return ABDiagram(std::move(rows));
}

std::vector<std::size_t> column_lengths(const ABDiagram& d)
{
    return transpose(d.shape()).parts();
}

std::optional<ABDiagram> remove_column_pair(const ABDiagram& d, std::size_t j)
{
    const auto cols = column_lengths(d);
    if (j < 1 || j + 1 > cols.size() || cols[j - 1] != cols[j]) {
        return std::nullopt;
    }
    std::vector<std::string> rows;
    for (const auto& row : d.rows()) {
        if (row.size() < j) {
            rows.push_back(row);
            continue;
        }
        // Equal column lengths mean no row ends at column j, so this row
        // covers both columns; dropping two adjacent letters keeps it alternating.
        std::string shorter = row;
        shorter.erase(j - 1, 2);
        if (!shorter.empty()) {
            rows.push_back(std::move(shorter));
        }
    }
    return ABDiagram(std::move(rows));
}

ABDiagram rigidify(const ABDiagram& d)
{
    ABDiagram current = d;
    bool changed = true;
    while (changed) {
        changed = false;
        const auto cols = column_lengths(current);
        for (std::size_t j = 1; j < cols.size(); ++j) {
            if (auto next = remove_column_pair(current, j)) {
                current = std::move(*next);
                changed = true;
                break;
            }
        }
    }
    return current;
}

}  // namespace sheets
