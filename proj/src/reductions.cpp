#include "euler/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace euler {

namespace {

std::string var_label(int i, int branch_node) {
    // branch_node: 0 entry, 1..2 positive branch, 3..4 negated branch, 5 exit
    const std::string base = "var" + std::to_string(i);
    switch (branch_node) {
        case 0: return base + ".in";
        case 1: return base + ".pos1";
        case 2: return base + ".pos2";
        case 3: return base + ".neg1";
        case 4: return base + ".neg2";
        default: return base + ".out";
    }
}

std::string clause_label(int j, int gadget_node) {
    // gadget_node: 0 entry, 2h-1 / 2h the two nodes of branch h, 7 exit
    const std::string base = "clause" + std::to_string(j);
    if (gadget_node == 0) return base + ".in";
    if (gadget_node == 7) return base + ".out";
    const int h = (gadget_node + 1) / 2;
    const char* half = (gadget_node % 2 == 1) ? ".head" : ".tail";
    return base + ".lit" + std::to_string(h) + half;
}

} // namespace

CnfFormula parse_cnf(std::istream& in) {
    CnfFormula f;
    int expected_clauses = -1;
    int line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first)) continue;
        if (first[0] == 'c' && first != "cnf") continue;
        if (first == "p") {
            if (expected_clauses >= 0) throw ParseError(line_no, "duplicate p line");
            std::string format;
            int n = 0;
            int m = 0;
            if (!(tokens >> format >> n >> m) || format != "cnf")
                throw ParseError(line_no, "expected `p cnf <vars> <clauses>`");
            if (n < 1 || m < 1)
                throw ParseError(line_no, "variable and clause counts must be positive");
            std::string extra;
            if (tokens >> extra) throw ParseError(line_no, "trailing tokens after the p line");
            f.num_vars = n;
            expected_clauses = m;
            continue;
        }
        if (expected_clauses < 0) throw ParseError(line_no, "clause before the p line");
        if (f.clause_count() == expected_clauses)
            throw ParseError(line_no, "more clauses than the p line declares");
        std::istringstream ints(line);
        std::array<int, 3> lits{};
        int got = 0;
        bool terminated = false;
        int lit = 0;
        while (ints >> lit) {
            if (terminated) throw ParseError(line_no, "tokens after the terminating 0");
            if (lit == 0) {
                terminated = true;
                continue;
            }
            if (got == 3) throw ParseError(line_no, "more than three literals in a clause");
            if (std::abs(lit) > f.num_vars)
                throw ParseError(line_no, "literal out of range: " + std::to_string(lit));
            lits[static_cast<std::size_t>(got++)] = lit;
        }
        if (!ints.eof()) throw ParseError(line_no, "malformed literal");
        if (!terminated) throw ParseError(line_no, "clause line must end with 0");
        if (got != 3) throw ParseError(line_no, "expected exactly three literals, got " +
                                                    std::to_string(got));
        f.clauses.push_back(lits);
    }
    if (expected_clauses < 0) throw ParseError(0, "missing p line");
    if (f.clause_count() != expected_clauses)
        throw ParseError(0, "fewer clauses than the p line declares");
    return f;
}

CnfFormula parse_cnf(const std::string& text) {
    std::istringstream in(text);
    return parse_cnf(in);
}

void validate_cnf(const CnfFormula& f) {
    if (f.num_vars < 1) throw std::invalid_argument("formula must have at least one variable");
    std::vector<int> positive(static_cast<std::size_t>(f.num_vars) + 1, 0);
    std::vector<int> negated(static_cast<std::size_t>(f.num_vars) + 1, 0);
    for (const auto& clause : f.clauses)
        for (int lit : clause) {
            if (lit == 0) throw std::invalid_argument("literal 0 inside a clause");
            const int var = std::abs(lit);
            if (var > f.num_vars)
                throw std::invalid_argument("literal out of range: " + std::to_string(lit));
            ++(lit > 0 ? positive : negated)[static_cast<std::size_t>(var)];
        }
    for (int i = 1; i <= f.num_vars; ++i) {
        const int p = positive[static_cast<std::size_t>(i)];
        const int n = negated[static_cast<std::size_t>(i)];
        if (p != 2 || n != 2)
            throw std::invalid_argument(
                "variable " + std::to_string(i) + " must occur exactly twice positively and " +
                "twice negated, found " + std::to_string(p) + "+" + std::to_string(n));
    }
}

PartitionedGraph make_partitioned(Graph base, const std::vector<PartAssignment>& assignments) {
    int k = 0;
    for (const PartAssignment& a : assignments) {
        if (a.part < 1)
            throw std::invalid_argument("part ids must be positive, got " +
                                        std::to_string(a.part));
        k = std::max(k, a.part);
    }
    PartitionedGraph p{std::move(base), std::vector<std::vector<int>>(static_cast<std::size_t>(k))};
    for (const PartAssignment& a : assignments)
        p.parts[static_cast<std::size_t>(a.part - 1)].push_back(a.vertex);
    for (auto& part : p.parts) std::sort(part.begin(), part.end());
    validate_partitioned(p);
    return p;
}

void validate_partitioned(const PartitionedGraph& p) {
    if (p.base.directed())
        throw std::invalid_argument("partitioned graphs must be undirected");
    if (p.parts.empty()) throw std::invalid_argument("at least one part is required");
    const int n = p.base.vertex_count();
    std::vector<int> owner(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i].empty())
            throw std::invalid_argument("part " + std::to_string(i + 1) + " is empty");
        for (int v : p.parts[i]) {
            if (!p.base.valid_vertex(v))
                throw std::invalid_argument("part member out of range: " + std::to_string(v));
            int& o = owner[static_cast<std::size_t>(v)];
            if (o != 0)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " assigned to more than one part");
            o = static_cast<int>(i) + 1;
        }
    }
    for (int v = 1; v <= n; ++v)
        if (owner[static_cast<std::size_t>(v)] == 0)
            throw std::invalid_argument("vertex " + std::to_string(v) + " is in no part");
    for (const Edge& e : p.base.edges())
        if (owner[static_cast<std::size_t>(e.tail)] == owner[static_cast<std::size_t>(e.head)])
            throw std::invalid_argument("edge {" + std::to_string(e.tail) + "," +
                                        std::to_string(e.head) + "} lies inside a part");
}

ReductionOutput reduce_hamiltonian_cubic(const Graph& g) {
    if (g.directed())
        throw std::invalid_argument("the subdivision construction expects an undirected graph");
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("the source graph is empty");
    for (int v = 1; v <= n; ++v)
        if (g.degree(v) != 3)
            throw std::invalid_argument("source is not cubic: vertex " + std::to_string(v) +
                                        " has degree " + std::to_string(g.degree(v)));
    const int m = g.edge_count();
    ReductionOutput out;
    std::vector<std::pair<int, int>> target_edges;
    target_edges.reserve(2 * static_cast<std::size_t>(m));
    for (int v = 1; v <= n; ++v) out.provenance[v] = "vertex" + std::to_string(v);
    for (int id = 0; id < m; ++id) {
        const Edge& e = g.edge(id);
        const int mid = n + 1 + id;
        target_edges.emplace_back(e.tail, mid);
        target_edges.emplace_back(mid, e.head);
        out.provenance[mid] = "edge" + std::to_string(e.tail) + "-" + std::to_string(e.head);
    }
    out.target = Graph(n + m, Orientation::undirected, target_edges);
    out.parameter = 2 * n;
    return out;
}

ReductionOutput reduce_multicolored_clique(const PartitionedGraph& p) {
    validate_partitioned(p);
    const int n = p.base.vertex_count();
    const int k = p.part_count();
    std::vector<int> part_of(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < k; ++i)
        for (int v : p.parts[static_cast<std::size_t>(i)])
            part_of[static_cast<std::size_t>(v)] = i + 1;

    // entry of part i is n + 2i - 1, exit is n + 2i
    const auto entry = [n](int i) { return n + 2 * i - 1; };
    const auto exit = [n](int i) { return n + 2 * i; };

    std::vector<std::pair<int, int>> arcs;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (part_of[static_cast<std::size_t>(u)] < part_of[static_cast<std::size_t>(v)] &&
                !p.base.has_edge(u, v))
                arcs.emplace_back(u, v);
    for (int i = 1; i <= k; ++i)
        for (int v : p.parts[static_cast<std::size_t>(i - 1)]) {
            arcs.emplace_back(entry(i), v);
            arcs.emplace_back(v, exit(i));
        }
    for (int i = 1; i <= k; ++i) arcs.emplace_back(exit(i), entry(i == k ? 1 : i + 1));

    ReductionOutput out;
    out.target = Graph(n + 2 * k, Orientation::directed, arcs);
    out.parameter = 3 * k;
    for (int v = 1; v <= n; ++v) out.provenance[v] = "vertex" + std::to_string(v);
    for (int i = 1; i <= k; ++i) {
        out.provenance[entry(i)] = "part" + std::to_string(i) + ".in";
        out.provenance[exit(i)] = "part" + std::to_string(i) + ".out";
    }
    return out;
}

ReductionOutput reduce_3sat_4occ(const CnfFormula& f, int k) {
    validate_cnf(f);
    const int n = f.num_vars;
    const int m = f.clause_count();
    if (k < 4 || k > 4 * (n + m))
        throw std::invalid_argument("k must lie in 4 .. 4(n+m) = " + std::to_string(4 * (n + m)) +
                                    ", got " + std::to_string(k));

    // variable gadget i occupies 6(i-1)+1 .. 6i, clause gadget j occupies
    // 6n+8(j-1)+1 .. 6n+8j; see var_label / clause_label for the node roles
    const auto var_node = [](int i, int node) { return 6 * (i - 1) + 1 + node; };
    const auto clause_node = [n](int j, int node) { return 6 * n + 8 * (j - 1) + 1 + node; };

    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= n; ++i) {
        arcs.emplace_back(var_node(i, 0), var_node(i, 1));
        arcs.emplace_back(var_node(i, 1), var_node(i, 2));
        arcs.emplace_back(var_node(i, 2), var_node(i, 5));
        arcs.emplace_back(var_node(i, 0), var_node(i, 3));
        arcs.emplace_back(var_node(i, 3), var_node(i, 4));
        arcs.emplace_back(var_node(i, 4), var_node(i, 5));
    }
    for (int i = 2; i <= n; ++i) arcs.emplace_back(var_node(i - 1, 5), var_node(i, 0));
    for (int j = 1; j <= m; ++j)
        for (int h = 1; h <= 3; ++h) {
            arcs.emplace_back(clause_node(j, 0), clause_node(j, 2 * h - 1));
            arcs.emplace_back(clause_node(j, 2 * h - 1), clause_node(j, 2 * h));
            arcs.emplace_back(clause_node(j, 2 * h), clause_node(j, 7));
        }
    for (int j = 2; j <= m; ++j) arcs.emplace_back(clause_node(j - 1, 7), clause_node(j, 0));
    arcs.emplace_back(var_node(n, 5), clause_node(1, 0));
    arcs.emplace_back(clause_node(m, 7), var_node(1, 0));

    // literal occurrences are numbered in clause order, then position order
    std::vector<int> seen_positive(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> seen_negated(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 1; j <= m; ++j)
        for (int h = 1; h <= 3; ++h) {
            const int lit = f.clauses[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(h - 1)];
            const int var = std::abs(lit);
            const int occurrence =
                ++(lit > 0 ? seen_positive : seen_negated)[static_cast<std::size_t>(var)];
            const int anchor = var_node(var, (lit > 0 ? 0 : 2) + occurrence);
            arcs.emplace_back(anchor, clause_node(j, 2 * h - 1));
            arcs.emplace_back(clause_node(j, 2 * h), anchor);
        }

    ReductionOutput out;
    out.target = Graph(6 * n + 8 * m, Orientation::directed, arcs);
    out.parameter = k;
    for (int i = 1; i <= n; ++i)
        for (int node = 0; node <= 5; ++node) out.provenance[var_node(i, node)] = var_label(i, node);
    for (int j = 1; j <= m; ++j)
        for (int node = 0; node <= 7; ++node)
            out.provenance[clause_node(j, node)] = clause_label(j, node);
    return out;
}

std::vector<int> sat_witness_vertices(const CnfFormula& f, const std::vector<bool>& assignment) {
    validate_cnf(f);
    if (static_cast<int>(assignment.size()) != f.num_vars)
        throw std::invalid_argument("assignment covers " + std::to_string(assignment.size()) +
                                    " variables, formula has " + std::to_string(f.num_vars));
    const int n = f.num_vars;
    std::vector<int> u;
    for (int i = 1; i <= n; ++i) {
        const int base = 6 * (i - 1);
        u.push_back(base + 1);
        // keep the falsified branch: its anchors have no arcs into any chosen
        // clause branch, so the union below stays an induced cycle
        if (assignment[static_cast<std::size_t>(i - 1)]) {
            u.push_back(base + 4);
            u.push_back(base + 5);
        } else {
            u.push_back(base + 2);
            u.push_back(base + 3);
        }
        u.push_back(base + 6);
    }
    for (int j = 1; j <= f.clause_count(); ++j) {
        int chosen = 0;
        for (int h = 1; h <= 3; ++h) {
            const int lit = f.clauses[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(h - 1)];
            if ((lit > 0) == assignment[static_cast<std::size_t>(std::abs(lit) - 1)]) {
                chosen = h;
                break;
            }
        }
        if (chosen == 0)
            throw std::invalid_argument("assignment does not satisfy clause " + std::to_string(j));
        const int base = 6 * n + 8 * (j - 1);
        u.push_back(base + 1);
        u.push_back(base + 2 * chosen);
        u.push_back(base + 2 * chosen + 1);
        u.push_back(base + 8);
    }
    std::sort(u.begin(), u.end());
    return u;
}

bool verify_reduction(bool src_answer, const ReductionOutput& out, const TargetSolver& solver,
                      const std::optional<std::vector<int>>& witness) {
    if (witness) {
        if (!src_answer)
            throw std::invalid_argument("a witness can only support a yes answer");
        EulerCertificate cert;
        cert.vertices = *witness;
        std::sort(cert.vertices.begin(), cert.vertices.end());
        cert.vertices.erase(std::unique(cert.vertices.begin(), cert.vertices.end()),
                            cert.vertices.end());
        return verify_euler_certificate(out.target, cert, out.parameter);
    }
    return solver(out.target, out.parameter) == src_answer;
}

} // namespace euler
