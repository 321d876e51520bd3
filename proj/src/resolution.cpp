#include "mobius/resolution.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "json.hpp"
#include "mobius/graph.hpp"
#include "mobius/linalg.hpp"

namespace mobius {

// ---------------------------------------------------------------- algebra

StructuredAlgebra::StructuredAlgebra(const GmaAlgebra& a) {
    const int n = a.dimension();
    if (n > 4000) throw SizeLimit("algebra too large for a product table");
    degree_.resize(n);
    key_.resize(n);
    for (int i = 0; i < n; ++i) {
        degree_[i] = a.degree(i);
        key_[i] = i;
    }
    key_count_ = n;
    key_join_.assign(static_cast<std::size_t>(n) * n, 0);
    prod_index_.assign(static_cast<std::size_t>(n) * n, -1);
    prod_coef_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::size_t at = static_cast<std::size_t>(i) * n + j;
            key_join_[at] = a.join(i, j);
            const int p = a.product(i, j);
            prod_index_[at] = p;
            prod_coef_[at] = p >= 0 ? 1 : 0;
        }
    }
    finish();
}

StructuredAlgebra StructuredAlgebra::from_products(std::vector<int> degrees,
                                                   const std::vector<std::tuple<int, int, int, long long>>& products) {
    const int n = static_cast<int>(degrees.size());
    if (n == 0 || degrees[0] != 0) throw BadArgument("basis element 0 must be the unit of degree 0");
    for (int i = 1; i < n; ++i)
        if (degrees[i] <= 0) throw BadArgument("only the unit may have degree 0");
    StructuredAlgebra a;
    a.degree_ = std::move(degrees);
    a.key_.assign(n, 0);
    a.prod_index_.assign(static_cast<std::size_t>(n) * n, -1);
    a.prod_coef_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        a.prod_index_[i] = i;
        a.prod_coef_[i] = 1;
        a.prod_index_[static_cast<std::size_t>(i) * n] = i;
        a.prod_coef_[static_cast<std::size_t>(i) * n] = 1;
    }
    for (const auto& [i, j, k, c] : products) {
        if (i <= 0 || j <= 0 || i >= n || j >= n || k < 0 || k >= n) throw BadArgument("product index out of range");
        if (a.degree_[k] != a.degree_[i] + a.degree_[j]) throw BadArgument("product table is not graded");
        const std::size_t at = static_cast<std::size_t>(i) * n + j;
        a.prod_index_[at] = c == 0 ? -1 : k;
        a.prod_coef_[at] = c;
    }
    a.finish();
    // Every basis element of degree d >= 2 lies in A_1 A_{d-1}.
    const PrimeField f;
    for (int d = 2; d <= a.top_degree(); ++d) {
        Echelon<PrimeField> e(f);
        for (int x : a.basis_of_degree(1))
            for (int y : a.basis_of_degree(d - 1)) {
                const auto p = a.product(x, y);
                if (p.index >= 0) e.insert(make_sparse(f, {{p.index, f.from_int(p.coef)}}));
            }
        if (e.rank() != a.basis_of_degree(d).size()) throw BadArgument("algebra is not generated in degree one");
    }
    return a;
}

StructuredAlgebra StructuredAlgebra::truncated_polynomial(int top) {
    if (top < 0) throw BadArgument("negative top degree");
    std::vector<int> deg(top + 1);
    std::vector<std::tuple<int, int, int, long long>> prod;
    for (int i = 0; i <= top; ++i) {
        deg[i] = i;
        for (int j = 1; i >= 1 && i + j <= top; ++j) prod.emplace_back(i, j, i + j, 1);
    }
    return from_products(std::move(deg), prod);
}

void StructuredAlgebra::finish() {
    int top = 0;
    for (int d : degree_) top = std::max(top, d);
    by_degree_.assign(top + 1, {});
    for (int i = 0; i < dimension(); ++i) by_degree_[degree_[i]].push_back(i);
}

std::vector<std::size_t> StructuredAlgebra::hilbert_function() const {
    std::vector<std::size_t> h;
    for (const auto& b : by_degree_) h.push_back(b.size());
    return h;
}

StructuredAlgebra StructuredAlgebra::with_trivial_keys() const {
    StructuredAlgebra a = *this;
    a.key_.assign(dimension(), 0);
    a.key_count_ = 1;
    a.key_join_.assign(1, 0);
    return a;
}

bool StructuredAlgebra::key_homogeneous(const AlgebraElement& x) const {
    for (const auto& [i, c] : x)
        if (key_[i] != key_[x.front().first]) return false;
    return true;
}

// ---------------------------------------------------------------- tables

std::size_t BettiTable::total(int i) const {
    std::size_t s = 0;
    for (const auto& [ij, b] : entries)
        if (ij.first == i) s += b;
    return s;
}

namespace {

std::string with_commas(std::size_t x) {
    std::string s = std::to_string(x);
    for (int at = static_cast<int>(s.size()) - 3; at > 0; at -= 3) s.insert(static_cast<std::size_t>(at), ",");
    return s;
}

}  // namespace

std::string BettiTable::to_text() const {
    int rows = 0;
    for (const auto& [ij, b] : entries) rows = std::max(rows, ij.second - ij.first);
    std::vector<std::vector<std::string>> cells(rows + 2, std::vector<std::string>(max_step + 2));
    cells[0][0] = "";
    for (int i = 0; i <= max_step; ++i) cells[0][i + 1] = std::to_string(i);
    for (int r = 0; r <= rows; ++r) {
        cells[r + 1][0] = std::to_string(r);
        for (int i = 0; i <= max_step; ++i) {
            const std::size_t b = at(i, i + r);
            cells[r + 1][i + 1] = b ? with_commas(b) : (computed(i, i + r) ? "--" : ".");
        }
    }
    std::vector<std::size_t> width(max_step + 2, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (std::size_t r = 0; r < cells.size(); ++r) {
        for (std::size_t c = 0; c < cells[r].size(); ++c) {
            os << std::setw(static_cast<int>(width[c])) << cells[r][c];
            os << (c == 0 ? " |" : (c + 1 < cells[r].size() ? " " : ""));
            if (c + 1 < cells[r].size()) os << " ";
        }
        os << "\n";
        if (r == 0) os << std::string(width[0] + 1, '-') << "+" << std::string(20 + 2 * max_step, '-') << "\n";
    }
    return os.str();
}

std::string BettiTable::to_json() const {
    nlohmann::json j;
    j["entries"] = nlohmann::json::array();
    for (const auto& [ij, b] : entries) j["entries"].push_back({{"i", ij.first}, {"j", ij.second}, {"beta", b}});
    j["char"] = characteristic;
    j["truncation"] = {{"max_step", max_step}, {"degree_caps", degree_caps}};
    return j.dump();
}

std::string ResidualReport::to_json() const {
    nlohmann::json j;
    j["vanishes"] = vanishes();
    j["coefficients_checked"] = coefficients_checked;
    j["nonzero"] = nlohmann::json::array();
    for (const auto& [i, k, v] : nonzero) j["nonzero"].push_back({{"i", i}, {"j", k}, {"value", v}});
    return j.dump();
}

// ---------------------------------------------------------------- engine

namespace {

// Minimal free resolution computed block by block. A basis element e_g y_H
// of F_k is stored as g * dim(A) + H and lies in the block
// (key(g) v key(H), deg g + deg H).
template <class F>
class Engine {
public:
    using V = typename F::value;
    using Vec = SparseVec<V>;

    struct Gen {
        int key = 0;
        int degree = 0;
        Vec d;
    };

    Engine(const StructuredAlgebra& a, F f, const ResolutionOptions& opt,
           const std::vector<AlgebraElement>* ideal)
        : a_(a), f_(std::move(f)), opt_(opt), ideal_(ideal), dim_(a.dimension()) {
        caps_.resize(opt.max_step + 1);
        int dc = opt.degree_cap;
        if (dc < 0 && opt.strand_cap < 0) dc = opt.max_step + 2;
        for (int k = 0; k <= opt.max_step; ++k) {
            int c = dc < 0 ? INT_MAX : dc;
            if (opt.strand_cap >= 0) c = std::min(c, k + opt.strand_cap);
            caps_[k] = c;
        }
        caps_[0] = std::max(caps_[0], 0);
        if (ideal_) {
            for (const auto& x : *ideal_) {
                if (x.empty()) continue;
                const int d = a.degree(x.front().first);
                for (const auto& [i, c] : x) {
                    if (i < 0 || i >= dim_) throw BadArgument("ideal generator index out of range");
                    if (a.degree(i) != d) throw BadArgument("ideal generators must be homogeneous");
                }
                if (d == 0) throw BadArgument("ideal generators must have positive degree");
            }
        }
    }

    ResolutionResult run() {
        ResolutionResult out;
        out.table.characteristic = f_.characteristic();
        out.table.max_step = opt_.max_step;
        out.table.degree_caps = caps_;
        gens_.assign(opt_.max_step + 1, {});
        gens_[0].push_back({0, 0, {}});
        out.table.entries[{0, 0}] = 1;
        for (int k = 1; k <= opt_.max_step; ++k) {
            for (int d = k; d <= caps_[k]; ++d) {
                if (d > max_useful_degree(k)) break;
                step(k, d, out.table);
            }
        }
        out.vectors_reduced = reduced_;
        if (opt_.verify) out.check = verify();
        return out;
    }

private:
    using Pair = std::pair<int, int>;  // (generator, basis element of A)
    using Groups = std::map<int, std::vector<Pair>>;

    // Internal degrees beyond this carry no new generators at step k: F_{k-1}
    // vanishes there.
    int max_useful_degree(int k) const {
        int m = 0;
        for (const auto& g : gens_[k - 1]) m = std::max(m, g.degree);
        return m + a_.top_degree();
    }

    // Pairs (g, H) of F_k with deg g + deg H = d and deg g < d (or <= d when
    // `include_new`), grouped by block key.
    Groups pairs(int k, int d, bool include_new) const {
        Groups g;
        const auto& gens = gens_[k];
        for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
            const int dg = gens[i].degree;
            if (dg > d || (dg == d && !include_new)) continue;
            for (int h : a_.basis_of_degree(d - dg)) g[a_.key_join(gens[i].key, a_.key(h))].push_back({i, h});
        }
        return g;
    }

    // y_H * d(e_g) for a generator of F_k, k >= 1, as a vector in F_{k-1}.
    Vec image(int k, Pair p) const {
        const Gen& g = gens_[k][p.first];
        std::vector<std::pair<int, V>> terms;
        terms.reserve(g.d.size());
        for (std::size_t t = 0; t < g.d.size(); ++t) {
            const int col = g.d.idx[t];
            const auto pr = a_.product(col % dim_, p.second);
            if (pr.index < 0) continue;
            terms.emplace_back(col - col % dim_ + pr.index, f_.mul(g.d.val[t], f_.from_int(pr.coef)));
        }
        return make_sparse(f_, std::move(terms));
    }

    // y_H * x for an element of A, as a vector in F_0.
    Vec ideal_image(const AlgebraElement& x, int h) const {
        std::vector<std::pair<int, V>> terms;
        for (const auto& [i, c] : x) {
            const auto pr = a_.product(i, h);
            if (pr.index >= 0) terms.emplace_back(pr.index, f_.from_int(c * pr.coef));
        }
        return make_sparse(f_, std::move(terms));
    }

    std::size_t block_size(const std::vector<Pair>* v) const { return v ? v->size() : 0; }

    void check_cap(std::size_t n) const {
        if (n > opt_.block_cap) throw SizeLimit("elimination block exceeds " + std::to_string(opt_.block_cap) + " vectors");
    }

    struct BlockInput {
        int key = 0;
        const std::vector<Pair>* cur = nullptr;       // pairs of F_k, old part
        const std::vector<Pair>* prev_old = nullptr;  // pairs of F_{k-1}, old part
        std::optional<long long> euler_z;             // dim Z_{k-1} when known
    };

    struct BlockOutput {
        long long z = 0;
        long long beta = 0;
        std::vector<Gen> gens;
        std::size_t reduced = 0;
    };

    // Basis of Z_0 in a block: the ideal, or m F_0 for the residue field.
    std::vector<Vec> z0_basis(int key, int d) const {
        std::vector<Vec> out;
        if (!ideal_) {
            if (d == 0) return out;
            for (int h : a_.basis_of_degree(d))
                if (a_.key(h) == key) out.push_back(make_sparse(f_, {{h, f_.one()}}));
            return out;
        }
        Echelon<F> e(f_);
        for (const auto& x : *ideal_) {
            if (x.empty()) continue;
            const int dx = a_.degree(x.front().first);
            if (dx > d) continue;
            for (int h : a_.basis_of_degree(d - dx)) {
                if (a_.key_join(a_.key(x.front().first), a_.key(h)) != key) continue;
                Vec v = ideal_image(x, h);
                if (!v.empty() && e.insert(v)) out.push_back(std::move(v));
            }
        }
        return out;
    }

    BlockOutput block(int k, int d, const BlockInput& in, bool need_gens) const {
        BlockOutput out;
        check_cap(block_size(in.cur));
        check_cap(block_size(in.prev_old));
        std::vector<Vec> kernel;
        bool have_kernel = false;
        if (k == 1) {
            kernel = z0_basis(in.key, d);
            have_kernel = true;
            out.z = static_cast<long long>(kernel.size());
        } else if (in.euler_z) {
            out.z = *in.euler_z;
        } else {
            Echelon<F> e(f_);
            for (const Pair& p : *in.prev_old) {
                e.insert(image(k - 1, p));
                ++out.reduced;
            }
            out.z = static_cast<long long>(in.prev_old->size()) - static_cast<long long>(e.rank());
        }
        if (out.z == 0) return out;

        Echelon<F> img(f_);
        if (in.cur) {
            for (const Pair& p : *in.cur) {
                img.insert(image(k, p));
                ++out.reduced;
                if (static_cast<long long>(img.rank()) == out.z) break;
            }
        }
        out.beta = out.z - static_cast<long long>(img.rank());
        if (out.beta < 0) throw MismatchBug("image of the differential exceeds the kernel");
        if (out.beta == 0 || !need_gens) return out;

        if (!have_kernel) {
            Echelon<F> e(f_, true);
            for (const Pair& p : *in.prev_old) {
                e.insert(image(k - 1, p), p.first * dim_ + p.second);
                ++out.reduced;
            }
            kernel = e.take_dependencies();
            if (static_cast<long long>(kernel.size()) != out.z)
                throw MismatchBug("kernel dimension disagrees with the Euler characteristic count");
        }
        for (Vec& z : kernel) {
            if (static_cast<long long>(out.gens.size()) == out.beta) break;
            if (img.insert(z)) out.gens.push_back({in.key, d, std::move(z)});
        }
        if (static_cast<long long>(out.gens.size()) != out.beta)
            throw MismatchBug("kernel does not supply the expected number of generators");
        return out;
    }

    void step(int k, int d, BettiTable& table) {
        const Groups cur = pairs(k, d, false);
        const Groups prev_old = k >= 2 ? pairs(k - 1, d, false) : Groups{};
        // Z_{k-1} by Euler characteristic when step k-1 covered degree d:
        // dim Z_{k-1} = dim F_{k-1} - dim Z_{k-2}, where the generators of
        // F_{k-1} in degree d are counted by their Betti numbers.
        const bool euler = k >= 2 && d <= caps_[k - 1];

        std::vector<int> keys;
        if (k == 1) {
            std::vector<char> seen(a_.key_count(), 0);
            if (ideal_) {
                for (const auto& x : *ideal_) {
                    if (x.empty() || a_.degree(x.front().first) > d) continue;
                    for (int h : a_.basis_of_degree(d - a_.degree(x.front().first)))
                        seen[a_.key_join(a_.key(x.front().first), a_.key(h))] = 1;
                }
            } else {
                for (int h : a_.basis_of_degree(d)) seen[a_.key(h)] = 1;
            }
            for (int g = 0; g < a_.key_count(); ++g)
                if (seen[g]) keys.push_back(g);
        } else {
            for (const auto& [g, v] : prev_old) keys.push_back(g);
        }

        std::vector<BlockInput> inputs;
        for (int g : keys) {
            BlockInput in;
            in.key = g;
            if (auto it = cur.find(g); it != cur.end()) in.cur = &it->second;
            if (auto it = prev_old.find(g); it != prev_old.end()) in.prev_old = &it->second;
            if (euler) in.euler_z = static_cast<long long>(in.prev_old->size()) + lookup(beta_, {k - 1, d, g}) -
                                    lookup(z_, {k - 2, d, g});
            inputs.push_back(in);
        }

        // Generators of degree d feed later degrees of this step and, below
        // the next step's cap, the next step.
        const bool need_gens = d < caps_[k] || (k < opt_.max_step && d < caps_[k + 1]);
        std::vector<BlockOutput> outs(inputs.size());
        std::atomic<std::size_t> next{0};
        std::exception_ptr err;
        std::mutex err_mu;
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < inputs.size();) {
                try {
                    outs[i] = block(k, d, inputs[i], need_gens);
                } catch (...) {
                    std::lock_guard lock(err_mu);
                    if (!err) err = std::current_exception();
                }
            }
        };
        const int threads = std::max(1, std::min<int>(opt_.threads, static_cast<int>(inputs.size())));
        std::vector<std::thread> pool;
        for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        if (err) std::rethrow_exception(err);

        long long beta = 0;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            z_[{k - 1, d, inputs[i].key}] = outs[i].z;
            if (outs[i].beta) beta_[{k, d, inputs[i].key}] = outs[i].beta;
            beta += outs[i].beta;
            reduced_ += outs[i].reduced;
            for (auto& g : outs[i].gens) gens_[k].push_back(std::move(g));
        }
        if (beta > 0) table.entries[{k, d}] = static_cast<std::size_t>(beta);
        if (opt_.progress) opt_.progress(k, d, beta);
    }

    ResolutionCheck verify() const {
        ResolutionCheck c;
        for (int k = 1; k <= opt_.max_step; ++k) {
            for (const Gen& g : gens_[k]) {
                ++c.differentials_checked;
                for (int col : g.d.idx)
                    if (a_.degree(col % dim_) == 0) c.minimal = false;
                if (k == 1) continue;
                std::vector<std::pair<int, V>> terms;
                for (std::size_t t = 0; t < g.d.size(); ++t) {
                    const Vec v = image(k - 1, {g.d.idx[t] / dim_, g.d.idx[t] % dim_});
                    for (std::size_t s = 0; s < v.size(); ++s)
                        terms.emplace_back(v.idx[s], f_.mul(g.d.val[t], v.val[s]));
                }
                if (!make_sparse(f_, std::move(terms)).empty()) c.differential_squares_to_zero = false;
            }
        }
        return c;
    }

    const StructuredAlgebra& a_;
    F f_;
    ResolutionOptions opt_;
    const std::vector<AlgebraElement>* ideal_;
    int dim_;
    std::vector<int> caps_;
    std::vector<std::vector<Gen>> gens_;
    using BlockKey = std::tuple<int, int, int>;  // (step, degree, key)
    static long long lookup(const std::map<BlockKey, long long>& m, const BlockKey& k) {
        auto it = m.find(k);
        return it == m.end() ? 0 : it->second;
    }

    std::map<BlockKey, long long> z_;
    std::map<BlockKey, long long> beta_;
    std::size_t reduced_ = 0;
};

ResolutionResult run_engine(const StructuredAlgebra& a, const ResolutionOptions& opt,
                            const std::vector<AlgebraElement>* ideal) {
    if (opt.max_step < 0) throw BadArgument("max_step must be nonnegative");
    if (opt.characteristic == 0) return Engine<RationalField>(a, RationalField{}, opt, ideal).run();
    return Engine<PrimeField>(a, PrimeField(opt.characteristic), opt, ideal).run();
}

}  // namespace

ResolutionResult resolve_residue_field(const StructuredAlgebra& a, const ResolutionOptions& options) {
    return run_engine(a, options, nullptr);
}

BettiTable betti_table_of_k(const StructuredAlgebra& a, int max_step, int max_internal_degree,
                            std::uint32_t characteristic, int threads) {
    ResolutionOptions o;
    o.max_step = max_step;
    o.degree_cap = max_internal_degree;
    o.characteristic = characteristic;
    o.threads = threads;
    return resolve_residue_field(a, o).table;
}

ResolutionResult resolve_cyclic_quotient(const StructuredAlgebra& a, const std::vector<AlgebraElement>& generators,
                                         const ResolutionOptions& options) {
    bool homogeneous = true;
    for (const auto& x : generators)
        if (!x.empty() && !a.key_homogeneous(x)) homogeneous = false;
    if (homogeneous) return run_engine(a, options, &generators);
    const StructuredAlgebra plain = a.with_trivial_keys();
    return run_engine(plain, options, &generators);
}

BettiTable betti_table_of_cyclic_quotient(const StructuredAlgebra& a, const std::vector<AlgebraElement>& generators,
                                          int max_step, int max_internal_degree, std::uint32_t characteristic) {
    ResolutionOptions o;
    o.max_step = max_step;
    o.degree_cap = max_internal_degree;
    o.characteristic = characteristic;
    return resolve_cyclic_quotient(a, generators, o).table;
}

std::vector<std::size_t> hilbert_series(const StructuredAlgebra& a) { return a.hilbert_function(); }

BiSeries poincare_series(const BettiTable& t) {
    BiSeries s;
    for (const auto& [ij, b] : t.entries) s[ij] = static_cast<long long>(b);
    return s;
}

KoszulProbe koszul_probe(const StructuredAlgebra& a, int max_step, int strand_cap, std::uint32_t characteristic,
                         int threads) {
    ResolutionOptions o;
    o.max_step = max_step;
    o.strand_cap = strand_cap;
    o.characteristic = characteristic;
    o.threads = threads;
    KoszulProbe p;
    p.table = resolve_residue_field(a, o).table;
    p.linear_through = max_step;
    for (const auto& [ij, b] : p.table.entries) {
        if (ij.second != ij.first) {
            p.first_nonlinear = ij;
            p.linear_through = ij.first - 1;
            break;
        }
    }
    return p;
}

ResidualReport hs_poincare_residual(const StructuredAlgebra& a, const BettiTable& t) {
    const auto hs = a.hilbert_function();
    ResidualReport r;
    for (int m = 1; m <= t.max_step; ++m) {
        long long c = 0;
        for (int i = 0; i <= m; ++i) {
            const long long h = m - i < static_cast<int>(hs.size()) ? static_cast<long long>(hs[m - i]) : 0;
            c += (i % 2 ? -1 : 1) * h * static_cast<long long>(t.total(i));
        }
        ++r.coefficients_checked;
        if (c != 0) r.nonzero.emplace_back(m, 0, c);
    }
    return r;
}

ResidualReport check_hs_poincare_identity(const StructuredAlgebra& a, int max_step, std::uint32_t characteristic,
                                          int threads) {
    return hs_poincare_residual(a, betti_table_of_k(a, max_step, max_step + 2, characteristic, threads));
}

ResidualReport check_trampoline_functional_equation(int n, int max_step, int degree_cap, std::uint32_t characteristic,
                                                    int threads) {
    if (n < 3) throw BadArgument("trampolines need n >= 3");
    if (n > 4) throw SizeLimit("functional equation check is limited to n <= 4");
    if (degree_cap < 0) degree_cap = max_step + 2;
    const Graph tg = trampoline(n);
    const Graph bg = broken_trampoline(n);
    const StructuredAlgebra ta{GmaAlgebra(cycle_matroid(tg))};
    const GmaAlgebra bgma(cycle_matroid(bg));
    const StructuredAlgebra ba{bgma};
    const int a_edge = bg.edge_id(0, n - 1);
    ResolutionOptions o;
    o.max_step = max_step;
    o.degree_cap = degree_cap;
    o.characteristic = characteristic;
    o.threads = threads;
    const BiSeries pt = poincare_series(resolve_residue_field(ta, o).table);
    const BiSeries pb = poincare_series(resolve_residue_field(ba, o).table);
    const BiSeries pq =
        poincare_series(resolve_cyclic_quotient(ba, {{{bgma.atom(a_edge), 1}}}, o).table);
    auto get = [](const BiSeries& s, int i, int j) {
        auto it = s.find({i, j});
        return it == s.end() ? 0LL : it->second;
    };
    ResidualReport r;
    for (int i = 0; i <= max_step; ++i) {
        for (int j = 0; j <= degree_cap; ++j) {
            long long c = get(pt, i, j) - get(pb, i, j);
            if (i >= 1 && j >= 1) {
                c -= get(pt, i - 1, j - 1);
                for (int i2 = 0; i2 <= i - 1; ++i2)
                    for (int j2 = 0; j2 <= j - 1; ++j2) c -= get(pt, i2, j2) * get(pq, i - 1 - i2, j - 1 - j2);
            }
            ++r.coefficients_checked;
            if (c != 0) r.nonzero.emplace_back(i, j, c);
        }
    }
    return r;
}

bool cross_characteristic_check(const StructuredAlgebra& a, const std::vector<std::uint32_t>& primes, int max_step,
                                int max_internal_degree, int threads) {
    if (primes.size() < 2) return true;
    if (max_internal_degree < 0) max_internal_degree = max_step + 2;
    const BettiTable first = betti_table_of_k(a, max_step, max_internal_degree, primes[0], threads);
    for (std::size_t k = 1; k < primes.size(); ++k)
        if (!(betti_table_of_k(a, max_step, max_internal_degree, primes[k], threads) == first)) return false;
    return true;
}

}  // namespace mobius
