#include "taut/relations.hpp"

#include "taut/echelon.hpp"
#include "taut/expr.hpp"
#include "taut/partitions.hpp"
#include "taut/operators.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace taut {

int RelationSpec::weight_sum() const {
    int s = 0;
    for (int v : ns) s += v;
    return s;
}

bool RelationSpec::in_window() const {
    if (d < 0 || d > k() - 1) return false;
    for (int v : ns)
        if (v <= 1) return false;
    return weight_sum() <= g;
}

namespace {

Monomial monomial_from_parts(const std::vector<int>& ns) {
    std::vector<int> e;
    for (int v : ns) {
        if (static_cast<int>(e.size()) < v) e.resize(static_cast<std::size_t>(v), 0);
        ++e[static_cast<std::size_t>(v) - 1];
    }
    return Monomial::from_exponents(std::move(e));
}

}  // namespace

Polynomial relation_partition_form(const RelationSpec& spec) {
    const int g = spec.g, d = spec.d, k = spec.k();
    const int cap = g;
    Polynomial out(cap);
    if (!spec.in_window()) return out;
    long sum = spec.weight_sum();
    for (int m = 1; m <= k; ++m) {
        Rational outer = binomial(Rational(m - 1), d + m - k);
        if (outer.is_zero()) continue;
        long t = g - d - m + k - sum;
        if (t < 0) continue;
        for (const auto& part : set_partitions(k, m)) {
            Rational w = outer;
            Monomial target = Monomial::from_exponents({static_cast<int>(t)});
            for (const auto& block : part.blocks) {
                w *= Rational(block_b(spec.ns, block));
                target = target.with_extra(block_d(spec.ns, block), 1);
            }
            out.add_term(target, w * Rational(Integer(1), factorial(t)));
        }
    }
    return out;
}

Polynomial relation_divided_form(const RelationSpec& spec) {
    const int g = spec.g, d = spec.d, k = spec.k();
    const int cap = g;
    Polynomial out(cap);
    if (!spec.in_window()) return out;
    long sum = spec.weight_sum();
    Polynomial bare = Polynomial::monomial(monomial_from_parts(spec.ns), Rational(1), cap);
    for (int j = 0; j <= d; ++j) {
        Rational c = binomial(Rational(k - 1 - j), d - j);
        if (c.is_zero()) continue;
        long t = g + j - d - sum;
        if (t < 0) continue;
        Polynomial dd = delta_divided(j, bare);
        if (dd.is_zero()) continue;
        out += c * (x1_divided_power(static_cast<int>(t), cap) * dd);
    }
    return out;
}

Polynomial few_factor_reduction(const std::vector<int>& ns, int d, int g) {
    const int k = static_cast<int>(ns.size());
    if (d < 1 || d > k - 1) throw std::invalid_argument("few_factor_reduction: need 1 <= d <= k-1");
    long sum = 0;
    for (int v : ns) {
        if (v <= 1) throw std::invalid_argument("few_factor_reduction: parts must exceed 1");
        sum += v;
    }
    if (sum + d > g) throw std::invalid_argument("few_factor_reduction: degree exceeds genus");
    const int cap = g;
    Polynomial out(cap);
    Rational sign(((k + d) % 2 == 0) ? 1 : -1);
    for (int j = 1; j <= d; ++j) {
        Rational outer = sign * binomial(Rational(k - 1 - j), d - j);
        if (outer.is_zero()) continue;
        long t = g - d - j + k - sum;
        if (t < 0) continue;
        for (const auto& part : set_partitions(k, j)) {
            Rational w = outer;
            Monomial target = Monomial::from_exponents({static_cast<int>(t)});
            for (const auto& block : part.blocks) {
                w *= Rational(block_b(ns, block));
                target = target.with_extra(block_d(ns, block), 1);
            }
            out.add_term(target, w * Rational(Integer(1), factorial(t)));
        }
    }
    return out;
}

Polynomial normalize_relation(const Polynomial& p) {
    if (p.is_zero()) return p;
    Integer den_lcm(1);
    for (const auto& [m, c] : p.terms()) {
        Integer den = c.denominator();
        Integer g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
        den_lcm = den_lcm / g * den;
    }
    Integer num_gcd(0);
    for (const auto& [m, c] : p.terms()) {
        Integer n = c.numerator() * den_lcm / c.denominator();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Polynomial r = p * Rational(den_lcm, num_gcd);
    if (r.coefficient(r.pivot_monomial()).sign() < 0) r = -r;
    return r;
}

RelationTable relation_table(int g, bool include_top) {
    if (g < 4) throw std::invalid_argument("relation_table: genus must be >= 4");
    // deduplicate per d-group with an incremental echelon span
    std::map<int, EchelonBasis, std::greater<>> groups;
    int d_min = include_top ? 0 : 1;
    for (int d = d_min; 2 * (d + 1) <= g; ++d) {
        EchelonBasis span(g);
        for (int k = std::max(1, d + 1); 2 * k <= g; ++k) {
            std::vector<int> ns;
            // multisets 2 <= n_1 <= ... <= n_k with sum <= g, lexicographic
            auto enumerate = [&](auto&& self, int depth, int lo, int budget) -> void {
                if (depth == k) {
                    RelationSpec spec{g, d, ns};
                    Polynomial rel = relation_partition_form(spec);
                    if (!rel.is_zero()) span.insert(rel);
                    return;
                }
                for (int v = lo; v * (k - depth) <= budget; ++v) {
                    ns.push_back(v);
                    self(self, depth + 1, v, budget - v);
                    ns.pop_back();
                }
            };
            enumerate(enumerate, 0, 2, g);
        }
        if (span.rank() > 0) groups.emplace(d, std::move(span));
    }
    RelationTable table;
    table.g = g;
    for (const auto& [d, span] : groups) {
        auto rows = span.rows();
        // most reduced relation first, matching the table presentation
        std::sort(rows.begin(), rows.end(), [](const Polynomial& a, const Polynomial& b) {
            return canonical_less(b.pivot_monomial(), a.pivot_monomial());
        });
        for (const auto& row : rows)
            table.rows.emplace_back(d, row.degree(), normalize_relation(row));
    }
    return table;
}

namespace {

std::map<std::pair<int, long>, std::vector<Polynomial>> group_rows(const RelationTable& t) {
    std::map<std::pair<int, long>, std::vector<Polynomial>> m;
    for (const auto& row : t.rows) m[{row.d, row.codim}].push_back(row.poly);
    return m;
}

}  // namespace

bool table_equivalent(const RelationTable& a, const RelationTable& b) {
    if (a.g != b.g) throw std::invalid_argument("table_equivalent: genus mismatch");
    auto ga = group_rows(a);
    auto gb = group_rows(b);
    if (ga.size() != gb.size()) return false;
    for (const auto& [key, rows_a] : ga) {
        auto it = gb.find(key);
        if (it == gb.end()) return false;
        EchelonBasis ea = EchelonBasis::reduce_rows(rows_a, key.second);
        EchelonBasis eb = EchelonBasis::reduce_rows(it->second, key.second);
        if (!ea.same_span(eb)) return false;
    }
    return true;
}

RelationTable load_relation_table(std::istream& in, int g) {
    RelationTable table;
    table.g = g;
    std::string line;
    int current_d = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        std::string body = line.substr(first, last - first + 1);
        if (body.empty() || body[0] == '#') continue;
        if (body.front() == '[') {
            if (body.rfind("[d=", 0) != 0 || body.back() != ']')
                throw std::invalid_argument("golden table line " + std::to_string(lineno) +
                                            ": malformed group header");
            current_d = std::stoi(body.substr(3, body.size() - 4));
            continue;
        }
        if (current_d < 0)
            throw std::invalid_argument("golden table line " + std::to_string(lineno) +
                                        ": relation before any [d=N] header");
        auto eq = body.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("golden table line " + std::to_string(lineno) +
                                        ": expected lhs = rhs");
        Polynomial lhs = parse_expression(body.substr(0, eq), g, Alphabet::P);
        Polynomial rhs = parse_expression(body.substr(eq + 1), g, Alphabet::P);
        Polynomial rel = lhs - rhs;
        if (rel.is_zero())
            throw std::invalid_argument("golden table line " + std::to_string(lineno) +
                                        ": trivial relation");
        long codim = rel.degree();
        if (!rel.homogeneous_of(codim))
            throw std::invalid_argument("golden table line " + std::to_string(lineno) +
                                        ": inhomogeneous relation");
        table.rows.emplace_back(current_d, codim, normalize_relation(rel));
    }
    return table;
}

RelationTable load_relation_table_file(const std::string& path, int g) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open golden table: " + path);
    return load_relation_table(in, g);
}

}  // namespace taut
