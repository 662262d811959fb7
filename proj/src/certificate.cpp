#include "collapsat/certificate.hpp"

#include "collapsat/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace collapsat {

namespace {

Rational int_pow(int base, int exp) {
    Rational r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Dense coordinate row of a sparse monomial vector over the given basis.
std::vector<Rational> dense_row(const MonomialVector& v,
                                const std::map<std::vector<int>, std::size_t>& index,
                                std::size_t width) {
    std::vector<Rational> row(width, Rational(0));
    for (const auto& [key, val] : v.coords) row[index.at(key)] = val;
    return row;
}

std::map<std::vector<int>, std::size_t> basis_index(const std::vector<std::vector<int>>& basis) {
    std::map<std::vector<int>, std::size_t> idx;
    for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
    return idx;
}

std::vector<Face> copy_edges(const WitnessCopy& copy) {
    std::vector<Face> edges;
    edges.reserve(copy.apexes.size());
    for (int u : copy.apexes) edges.push_back(face_union(copy.core, {u}));
    return edges;
}

// Incremental exact Gaussian elimination over the rationals, for span
// membership tests.
class SpanBasis {
public:
    // Reduces v against the basis; returns true iff v lies in the span.
    // Vectors outside the span are inserted.
    bool contains_or_insert(std::vector<Rational> v, bool insert_if_new) {
        reduce(v);
        auto piv = first_nonzero(v);
        if (!piv) return true;
        if (insert_if_new) rows_.emplace_back(*piv, std::move(v));
        return false;
    }

private:
    static std::optional<std::size_t> first_nonzero(const std::vector<Rational>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return i;
        return std::nullopt;
    }

    void reduce(std::vector<Rational>& v) const {
        for (const auto& [pc, row] : rows_) {
            if (v[pc] == 0) continue;
            Rational f = v[pc] / row[pc];
            for (std::size_t j = pc; j < v.size(); ++j)
                if (row[j] != 0) v[j] -= f * row[j];
        }
    }

    std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
};

} // namespace

std::vector<LinearForm> moment_forms(int count, int dim) {
    if (count < 1) throw Error(errc::parameter_range, "need at least one form");
    if (dim < 0) throw Error(errc::parameter_range, "variable count must be >= 0");
    std::vector<LinearForm> forms(count);
    for (int j = 0; j < count; ++j) {
        forms[j].coeffs.resize(dim);
        for (int k = 0; k < dim; ++k) forms[j].coeffs[k] = int_pow(j, k);
    }
    return forms;
}

FormSystem symmetric_system(int n, int d, int r) {
    if (d < 1 || r < 0 || d + r > n)
        throw Error(errc::parameter_range, "need d >= 1, r >= 0 and d + r <= n");
    FormSystem sys;
    sys.kind = FormSystem::Kind::Symmetric;
    sys.degree = d + 1;
    sys.forms = moment_forms(n, n - d - r);
    sys.block_of.assign(n, 0);
    sys.block_dims = {n - d - r};
    return sys;
}

FormSystem rainbow_system(const VertexPartition& P, const std::vector<int>& r_vec) {
    if (static_cast<int>(r_vec.size()) != P.part_count())
        throw Error(errc::part_count_mismatch, "r vector length differs from part count");
    FormSystem sys;
    sys.kind = FormSystem::Kind::Rainbow;
    sys.degree = P.part_count();
    sys.forms.resize(P.n());
    sys.block_of.assign(P.n(), 0);
    sys.block_dims.resize(P.part_count());
    for (int i = 0; i < P.part_count(); ++i) {
        int dim = P.part_size(i) - r_vec[i];
        if (dim < 0) throw Error(errc::parameter_range, "need r_i <= n_i");
        sys.block_dims[i] = dim;
        auto forms = moment_forms(P.part_size(i), dim);
        const auto& part = P.part(i);
        for (std::size_t p = 0; p < part.size(); ++p) {
            sys.forms[part[p]] = std::move(forms[p]);
            sys.block_of[part[p]] = i;
        }
    }
    return sys;
}

std::vector<std::vector<int>> monomial_basis(const FormSystem& sys) {
    std::vector<std::vector<int>> basis;
    if (sys.kind == FormSystem::Kind::Symmetric) {
        int D = sys.block_dims.at(0);
        std::vector<int> cur;
        auto rec = [&](auto&& self, int lo) -> void {
            if (static_cast<int>(cur.size()) == sys.degree) {
                basis.push_back(cur);
                return;
            }
            for (int j = lo; j < D; ++j) {
                cur.push_back(j);
                self(self, j);
                cur.pop_back();
            }
        };
        rec(rec, 0);
    } else {
        std::vector<int> cur;
        auto rec = [&](auto&& self, int block) -> void {
            if (block == static_cast<int>(sys.block_dims.size())) {
                basis.push_back(cur);
                return;
            }
            for (int j = 0; j < sys.block_dims[block]; ++j) {
                cur.push_back(j);
                self(self, block + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
    }
    return basis;
}

MonomialVector edge_vector(const Face& e, const FormSystem& sys) {
    if (static_cast<int>(e.size()) != sys.degree)
        throw Error(errc::wrong_size, "edge size differs from product degree");
    for (int v : e)
        if (v < 0 || v >= static_cast<int>(sys.forms.size()))
            throw Error(errc::index_out_of_range, "vertex " + std::to_string(v));

    MonomialVector out;
    if (sys.kind == FormSystem::Kind::Symmetric) {
        std::map<std::vector<int>, Rational> poly{{{}, Rational(1)}};
        for (int v : e) {
            const auto& c = sys.forms[v].coeffs;
            std::map<std::vector<int>, Rational> next;
            for (const auto& [key, val] : poly)
                for (std::size_t j = 0; j < c.size(); ++j) {
                    if (c[j] == 0) continue;
                    std::vector<int> k2 = key;
                    k2.insert(std::upper_bound(k2.begin(), k2.end(), static_cast<int>(j)),
                              static_cast<int>(j));
                    next[k2] += val * c[j];
                }
            poly = std::move(next);
        }
        for (auto& [key, val] : poly)
            if (val != 0) out.coords.emplace(key, std::move(val));
    } else {
        // One factor per block; the product of single-block forms has only
        // rainbow monomials, so coordinates factor as an outer product.
        std::vector<int> by_block(sys.block_dims.size(), -1);
        for (int v : e) {
            int b = sys.block_of[v];
            if (by_block[b] != -1)
                throw Error(errc::not_rainbow, "edge meets block " + std::to_string(b) + " twice");
            by_block[b] = v;
        }
        for (int v : by_block)
            if (v == -1) throw Error(errc::not_rainbow, "edge misses a block");

        std::map<std::vector<int>, Rational> poly{{{}, Rational(1)}};
        for (int v : by_block) {
            const auto& c = sys.forms[v].coeffs;
            std::map<std::vector<int>, Rational> next;
            for (const auto& [key, val] : poly)
                for (std::size_t j = 0; j < c.size(); ++j) {
                    if (c[j] == 0) continue;
                    std::vector<int> k2 = key;
                    k2.push_back(static_cast<int>(j));
                    next[k2] += val * c[j];
                }
            poly = std::move(next);
        }
        for (auto& [key, val] : poly)
            if (val != 0) out.coords.emplace(key, std::move(val));
    }
    return out;
}

std::pair<std::uint64_t, std::vector<std::size_t>>
exact_rank(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return {0, {}};
    const std::size_t R = rows.size();
    const std::size_t C = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != C) throw Error(errc::bad_input, "ragged matrix");

    // Clear denominators per row, then run fraction-free (Bareiss)
    // elimination over the integers; every interior division is exact.
    std::vector<std::vector<BigInt>> M(R, std::vector<BigInt>(C));
    for (std::size_t i = 0; i < R; ++i) {
        BigInt lcm = 1;
        for (const auto& q : rows[i]) {
            BigInt den = denominator(q);
            lcm = lcm / gcd(lcm, den) * den;
        }
        for (std::size_t j = 0; j < C; ++j)
            M[i][j] = numerator(rows[i][j]) * (lcm / denominator(rows[i][j]));
    }

    std::vector<std::size_t> origin(R);
    std::iota(origin.begin(), origin.end(), 0);

    std::uint64_t rank = 0;
    std::vector<std::size_t> pivot_rows;
    BigInt prev = 1;
    for (std::size_t col = 0; col < C && rank < R; ++col) {
        std::size_t piv = rank;
        while (piv < R && M[piv][col] == 0) ++piv;
        if (piv == R) continue;
        std::swap(M[rank], M[piv]);
        std::swap(origin[rank], origin[piv]);
        for (std::size_t i = rank + 1; i < R; ++i) {
            for (std::size_t j = col + 1; j < C; ++j) {
                BigInt num = M[rank][col] * M[i][j] - M[i][col] * M[rank][j];
                BigInt q, rem;
                divide_qr(num, prev, q, rem);
                if (rem != 0) throw Error(errc::rank_mismatch, "inexact division in elimination");
                M[i][j] = std::move(q);
            }
            M[i][col] = 0;
        }
        prev = M[rank][col];
        pivot_rows.push_back(origin[rank]);
        ++rank;
    }
    return {rank, pivot_rows};
}

namespace {

CertificateReport rank_report(const Hypergraph& host, const FormSystem& sys, std::uint64_t bound) {
    auto basis = monomial_basis(sys);
    auto index = basis_index(basis);
    std::vector<std::vector<Rational>> rows;
    rows.reserve(host.edge_count());
    for (const Face& e : host.edges)
        rows.push_back(dense_row(edge_vector(e, sys), index, basis.size()));
    auto [rank, pivots] = exact_rank(rows);

    CertificateReport rep;
    rep.rank = rank;
    rep.bound = bound;
    for (std::size_t i : pivots) rep.basis_edges.push_back(host.edges[i]);
    if (rank != bound)
        throw Error(errc::rank_mismatch, "rank " + std::to_string(rank) + " != bound " +
                                             std::to_string(bound) + " (general position failed)");
    return rep;
}

} // namespace

CertificateReport certificate_rank(const Hypergraph& host, int r) {
    const int d = host.uniformity - 1;
    if (host.parts) throw Error(errc::bad_input, "expected an unpartitioned complete host");
    if (host.edge_count() != binomial(host.n, host.uniformity))
        throw Error(errc::bad_input, "host is not complete");
    FormSystem sys = symmetric_system(host.n, d, r);
    return rank_report(host, sys, binomial(host.n - r, d + 1));
}

CertificateReport certificate_rank_colorful(const Hypergraph& host, const std::vector<int>& r_vec) {
    if (!host.parts) throw Error(errc::bad_input, "expected a partite host");
    const VertexPartition& P = *host.parts;
    std::uint64_t all = 1, bound = 1;
    for (int i = 0; i < P.part_count(); ++i) all *= static_cast<std::uint64_t>(P.part_size(i));
    if (host.edge_count() != all)
        throw Error(errc::bad_input, "host is not complete multipartite");
    FormSystem sys = rainbow_system(P, r_vec);
    for (int i = 0; i < P.part_count(); ++i)
        bound *= static_cast<std::uint64_t>(P.part_size(i) - r_vec[i]);
    return rank_report(host, sys, bound);
}

bool verify_span_condition(const WitnessCopy& copy, const FormSystem& sys) {
    auto basis = monomial_basis(sys);
    auto index = basis_index(basis);
    auto edges = copy_edges(copy);
    std::vector<std::vector<Rational>> rows;
    rows.reserve(edges.size());
    for (const Face& e : edges) rows.push_back(dense_row(edge_vector(e, sys), index, basis.size()));

    auto full_rank = exact_rank(rows).first;
    for (std::size_t skip = 0; skip < rows.size(); ++skip) {
        std::vector<std::vector<Rational>> others;
        others.reserve(rows.size() - 1);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != skip) others.push_back(rows[i]);
        if (exact_rank(others).first != full_rank) return false;
    }
    return true;
}

LemmaReplayResult replay_lemma(const SaturationInstance& inst, const FormSystem& sys) {
    auto basis = monomial_basis(sys);
    auto index = basis_index(basis);

    SpanBasis span;
    for (const Face& e : inst.start_edges)
        span.contains_or_insert(dense_row(edge_vector(e, sys), index, basis.size()), true);

    LemmaReplayResult res;
    for (std::size_t k = 0; k < inst.order.size(); ++k) {
        auto row = dense_row(edge_vector(inst.order[k], sys), index, basis.size());
        if (!span.contains_or_insert(std::move(row), false)) {
            res.failed_index = k;
            return res;
        }
    }
    res.ok = true;
    return res;
}

FormSystem system_for_instance(const SaturationInstance& inst) {
    const Hypergraph& host = inst.host;
    const int d = host.uniformity - 1;
    if (host.parts) {
        const VertexPartition& P = *host.parts;
        std::vector<int> r_vec(P.part_count(), -1);
        for (const StarPattern& p : inst.patterns) {
            if (!p.color) throw Error(errc::bad_input, "uncolored pattern on a partite host");
            int i = *p.color;
            if (r_vec.at(i) != -1) throw Error(errc::bad_input, "duplicate pattern color");
            r_vec[i] = std::max(0, P.part_size(i) - (p.big_part_size - 1));
        }
        for (int i = 0; i < P.part_count(); ++i)
            if (r_vec[i] == -1) throw Error(errc::bad_input, "missing pattern for a color");
        return rainbow_system(P, r_vec);
    }
    if (inst.patterns.size() != 1 || inst.patterns[0].color)
        throw Error(errc::bad_input, "expected a single uncolored pattern");
    int r = std::max(0, host.n - d - (inst.patterns[0].big_part_size - 1));
    return symmetric_system(host.n, d, r);
}

LemmaReplayResult replay_lemma(const SaturationInstance& inst) {
    return replay_lemma(inst, system_for_instance(inst));
}

} // namespace collapsat
