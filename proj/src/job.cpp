#include "squint/job.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace squint {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) {
        if (t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

SDim parse_sdim(const std::string& s, int line) {
    auto bar = s.find('|');
    if (bar == std::string::npos) throw ParseError("expected <p>|<q> super-dimension", line);
    try {
        int even = std::stoi(s.substr(0, bar));
        int odd = std::stoi(s.substr(bar + 1));
        if (even < 0 || odd < 0) throw ParseError("negative dimension", line);
        return SDim{even, odd};
    } catch (const std::invalid_argument&) {
        throw ParseError("bad super-dimension '" + s + "'", line);
    } catch (const std::out_of_range&) {
        throw ParseError("bad super-dimension '" + s + "'", line);
    }
}

int parse_int(const std::string& s, int line) {
    try {
        return std::stoi(s);
    } catch (...) {
        throw ParseError("expected an integer, got '" + s + "'", line);
    }
}

Rational parse_rational(const std::string& s, int line) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Rational r(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
        r.canonicalize();
        return r;
    } catch (...) {
        throw ParseError("bad rational '" + s + "'", line);
    }
}

std::vector<int> parse_int_list(const std::string& s, int line) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto comma = s.find(',', pos);
        std::string piece = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(parse_int(piece, line));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// joins tokens from position `from` (for free-form tails like polynomials)
std::string join_from(const std::vector<std::string>& toks, std::size_t from) {
    std::string s;
    for (std::size_t i = from; i < toks.size(); ++i) {
        if (!s.empty()) s += " ";
        s += toks[i];
    }
    return s;
}

// `<vertex>=<int>` pairs
void parse_weight_assign(const Quiver& q, const std::string& tok, Weight& w, int line) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("expected <vertex>=<int>", line);
    int v = -1;
    try {
        v = q.vertex_index(tok.substr(0, eq));
    } catch (const std::exception& e) {
        throw ParseError(e.what(), line);
    }
    w[v] = parse_int(tok.substr(eq + 1), line);
}

struct DetLikeParser {
    const Quiver& q;
    int line;
    DetLikeSpec spec;
    std::map<int, std::pair<int, int>> sink_range;   // vertex -> [block row range)
    std::map<int, std::pair<int, int>> source_range; // vertex -> [block col range)

    void finalize_ranges() {
        int u = 0;
        for (auto [a, mult] : spec.sinks) {
            sink_range[a] = {u, u + mult};
            u += mult;
        }
        int v = 0;
        for (auto [c, mult] : spec.sources) {
            source_range[c] = {v, v + mult};
            v += mult;
        }
    }
};

// `detlike <name> sink a:q=1 [...] source c:r=1 [...] block a c : 1*path(e1) + ...`
CmdDetlike parse_detlike(const Quiver& q, const std::vector<std::string>& toks, int line) {
    if (toks.size() < 2) throw ParseError("detlike needs a name", line);
    CmdDetlike cmd;
    cmd.name = toks[1];
    DetLikeParser dp{q, line, {}, {}, {}};
    std::size_t i = 2;
    auto parse_vertex_mult = [&](const std::string& tok, const char* key) {
        auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw ParseError(std::string("expected <vertex>:") + key + "=<m>", line);
        int v = q.vertex_index(tok.substr(0, colon));
        std::string rest = tok.substr(colon + 1);
        if (rest.rfind(std::string(key) + "=", 0) != 0)
            throw ParseError(std::string("expected ") + key + "=<m>", line);
        int m = parse_int(rest.substr(std::string(key).size() + 1), line);
        return std::make_pair(v, m);
    };
    while (i < toks.size() && toks[i] == "sink") {
        if (i + 1 >= toks.size()) throw ParseError("sink needs <vertex>:q=<m>", line);
        dp.spec.sinks.push_back(parse_vertex_mult(toks[i + 1], "q"));
        i += 2;
    }
    while (i < toks.size() && toks[i] == "source") {
        if (i + 1 >= toks.size()) throw ParseError("source needs <vertex>:r=<m>", line);
        dp.spec.sources.push_back(parse_vertex_mult(toks[i + 1], "r"));
        i += 2;
    }
    dp.finalize_ranges();

    // remaining: block clauses
    while (i < toks.size()) {
        if (toks[i] != "block") throw ParseError("expected 'block', got '" + toks[i] + "'", line);
        if (i + 3 >= toks.size()) throw ParseError("block needs <sink> <source> : <entries>", line);
        auto parse_addr = [&](const std::string& tok, const std::map<int, std::pair<int, int>>& ranges,
                              const char* what) {
            std::string id = tok;
            int local = -1;
            auto br = tok.find('[');
            if (br != std::string::npos) {
                if (tok.back() != ']') throw ParseError("bad block address", line);
                id = tok.substr(0, br);
                local = parse_int(tok.substr(br + 1, tok.size() - br - 2), line);
            }
            int v = q.vertex_index(id);
            auto it = ranges.find(v);
            if (it == ranges.end())
                throw ParseError(std::string(what) + " '" + id + "' is not listed in the spec", line);
            std::vector<int> positions;
            if (local < 0)
                for (int p = it->second.first; p < it->second.second; ++p) positions.push_back(p);
            else {
                int p = it->second.first + local;
                if (p >= it->second.second) throw ParseError("block index out of range", line);
                positions.push_back(p);
            }
            return positions;
        };
        std::vector<int> rows = parse_addr(toks[i + 1], dp.sink_range, "sink");
        std::vector<int> cols = parse_addr(toks[i + 2], dp.source_range, "source");
        if (toks[i + 3] != ":") throw ParseError("expected ':' after block address", line);
        i += 4;

        // entries: <coef>*path(e1 e2) joined by + / -, until next 'block' or end
        std::vector<std::pair<Rational, Path>> combo;
        int sign = 1;
        bool expect_entry = true;
        while (i < toks.size() && toks[i] != "block") {
            const std::string& t = toks[i];
            if (t == "+") {
                sign = 1;
                expect_entry = true;
                ++i;
                continue;
            }
            if (t == "-") {
                sign = -1;
                expect_entry = true;
                ++i;
                continue;
            }
            if (!expect_entry) throw ParseError("expected + or - between block entries", line);
            // accumulate tokens until the closing ')'
            std::string entry = t;
            while (entry.find(')') == std::string::npos && i + 1 < toks.size() &&
                   toks[i + 1] != "block")
                entry += " " + toks[++i];
            auto star = entry.find("*path(");
            std::string coef_str = "1";
            std::string path_str;
            if (star != std::string::npos) {
                coef_str = entry.substr(0, star);
                path_str = entry.substr(star + 6);
            } else if (entry.rfind("path(", 0) == 0) {
                path_str = entry.substr(5);
            } else
                throw ParseError("expected <coef>*path(...) block entry", line);
            if (path_str.empty() || path_str.back() != ')')
                throw ParseError("unterminated path(...)", line);
            path_str.pop_back();
            for (char& ch : path_str)
                if (ch == ',') ch = ' ';
            std::istringstream ps(path_str);
            Path p;
            std::string eid;
            while (ps >> eid) p.edges.push_back(q.edge_index(eid));
            if (p.edges.empty()) throw ParseError("empty path in block entry", line);
            Rational c = parse_rational(coef_str, line);
            if (sign < 0) c = -c;
            combo.emplace_back(c, p);
            sign = 1;
            expect_entry = false;
            ++i;
        }
        if (combo.empty()) throw ParseError("block without entries", line);
        for (int u : rows)
            for (int v : cols) {
                auto& dst = dp.spec.blocks[{u, v}];
                dst.insert(dst.end(), combo.begin(), combo.end());
            }
    }
    cmd.spec = std::move(dp.spec);
    return cmd;
}

} // namespace

JobFile parse_job(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;

    // first pass: quiver declaration lines must precede everything else
    struct RawLine {
        int no;
        std::vector<std::string> toks;
    };
    std::vector<RawLine> decl, rest;
    bool in_decl = true;
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        bool is_decl_line = (toks[0] == "vertex" || toks[0] == "edge");
        if (is_decl_line && !in_decl)
            throw ParseError("quiver declarations must precede commands", lineno);
        if (!is_decl_line) in_decl = false;
        (is_decl_line ? decl : rest).push_back(RawLine{lineno, toks});
    }
    if (decl.empty()) throw ParseError("job file declares no quiver", lineno);

    JobFile job;
    std::vector<SDim> alphas;
    std::vector<std::uint8_t> parities;
    for (const auto& [no, toks] : decl) {
        if (toks[0] == "vertex") {
            // vertex <id> sdim <p>|<q> parity <0|1>
            if (toks.size() != 6 || toks[2] != "sdim" || toks[4] != "parity")
                throw ParseError("expected: vertex <id> sdim <p>|<q> parity <0|1>", no);
            try {
                job.setup.quiver.add_vertex(toks[1]);
            } catch (const std::exception& e) {
                throw ParseError(e.what(), no);
            }
            alphas.push_back(parse_sdim(toks[3], no));
            int b = parse_int(toks[5], no);
            if (b != 0 && b != 1) throw ParseError("parity must be 0 or 1", no);
            parities.push_back(static_cast<std::uint8_t>(b));
        } else {
            // edge <id> <tail> -> <head>
            if (toks.size() != 5 || toks[3] != "->")
                throw ParseError("expected: edge <id> <tail> -> <head>", no);
            try {
                job.setup.quiver.add_edge(toks[1], toks[2], toks[4]);
            } catch (const std::exception& e) {
                throw ParseError(e.what(), no);
            }
        }
    }
    job.setup.alpha = std::move(alphas);
    job.setup.parity = std::move(parities);
    job.ctx = RingContext::make(job.setup);
    const Quiver& q = job.setup.quiver;

    for (const auto& [no, toks] : rest) {
        const std::string& c = toks[0];
        try {
            if (c == "paths" || c == "straces") {
                if (toks.size() != 3 || toks[1] != "maxlen")
                    throw ParseError("expected: " + c + " maxlen <k>", no);
                int k = parse_int(toks[2], no);
                if (k < 1) throw ParseError("maxlen must be >= 1", no);
                if (c == "paths")
                    job.commands.push_back(CmdPaths{k});
                else
                    job.commands.push_back(CmdStraces{k});
            } else if (c == "ringel") {
                CmdRingel cmd;
                if (toks.size() > 1) {
                    if (toks[1] != "beta") throw ParseError("expected: ringel [beta v=p|q ...]", no);
                    SuperDimVector beta = job.setup.alpha;
                    for (std::size_t i = 2; i < toks.size(); ++i) {
                        auto eq = toks[i].find('=');
                        if (eq == std::string::npos) throw ParseError("expected <vertex>=<p>|<q>", no);
                        int v = q.vertex_index(toks[i].substr(0, eq));
                        beta[v] = parse_sdim(toks[i].substr(eq + 1), no);
                    }
                    cmd.beta = std::move(beta);
                }
                job.commands.push_back(std::move(cmd));
            } else if (c == "classify") {
                job.commands.push_back(CmdClassify{});
            } else if (c == "normalize") {
                if (toks.size() != 2) throw ParseError("expected: normalize <vertex>", no);
                job.commands.push_back(CmdNormalize{q.vertex_index(toks[1])});
            } else if (c == "poly") {
                if (toks.size() < 4 || toks[2] != "=")
                    throw ParseError("expected: poly <name> = <polynomial>", no);
                Polynomial p = parse_polynomial(job.ctx, join_from(toks, 3));
                job.commands.push_back(CmdPolyDef{toks[1], std::move(p)});
            } else if (c == "detlike") {
                job.commands.push_back(parse_detlike(q, toks, no));
            } else if (c == "polarize") {
                if (toks.size() >= 4 && toks[2] == "check") {
                    // polarize <poly> check T <edge> ...
                    if (toks[3] != "T") throw ParseError("expected: polarize <poly> check T <edges>", no);
                    CmdPolarizeCheck cmd;
                    cmd.poly = toks[1];
                    for (std::size_t i = 4; i < toks.size(); ++i)
                        cmd.t_edges.insert(q.edge_index(toks[i]));
                    if (cmd.t_edges.empty()) throw ParseError("polarize check needs edges", no);
                    job.commands.push_back(std::move(cmd));
                } else if (toks.size() >= 4 && toks[2] == "s") {
                    // polarize <poly> s <edge>=<k1,k2,...> ...
                    CmdPolarizeSplit cmd;
                    cmd.poly = toks[1];
                    cmd.split.assign(q.edge_count(), {});
                    for (std::size_t i = 3; i < toks.size(); ++i) {
                        auto eq = toks[i].find('=');
                        if (eq == std::string::npos)
                            throw ParseError("expected <edge>=<k1,k2,...>", no);
                        int e = q.edge_index(toks[i].substr(0, eq));
                        cmd.split[e] = parse_int_list(toks[i].substr(eq + 1), no);
                    }
                    job.commands.push_back(std::move(cmd));
                } else
                    throw ParseError("expected: polarize <poly> s <edge>=... | polarize <poly> check T <edges>", no);
            } else if (c == "check") {
                if (toks.size() >= 3 && toks[1] == "invariant") {
                    job.commands.push_back(CmdCheckInvariant{toks[2]});
                } else if (toks.size() >= 4 && toks[1] == "weight") {
                    CmdCheckWeight cmd;
                    cmd.weight.assign(q.vertex_count(), 0);
                    std::size_t i = 2;
                    for (; i < toks.size() && toks[i] != "poly"; ++i)
                        parse_weight_assign(q, toks[i], cmd.weight, no);
                    if (i + 1 >= toks.size()) throw ParseError("expected: ... poly <name>", no);
                    cmd.poly = toks[i + 1];
                    job.commands.push_back(std::move(cmd));
                } else
                    throw ParseError("expected: check invariant <poly> | check weight <v>=<c> ... poly <name>", no);
            } else if (c == "oracle") {
                if (toks.size() < 3 || toks[1] != "degree")
                    throw ParseError("expected: oracle degree <edge>=<n> ... [compare maxlen <k>]", no);
                CmdOracle cmd;
                cmd.degree.assign(q.edge_count(), 0);
                std::size_t i = 2;
                for (; i < toks.size() && toks[i] != "compare"; ++i) {
                    auto eq = toks[i].find('=');
                    if (eq == std::string::npos) throw ParseError("expected <edge>=<n>", no);
                    int e = q.edge_index(toks[i].substr(0, eq));
                    cmd.degree[e] = parse_int(toks[i].substr(eq + 1), no);
                }
                if (i < toks.size()) {
                    if (i + 2 >= toks.size() || toks[i + 1] != "maxlen")
                        throw ParseError("expected: compare maxlen <k>", no);
                    cmd.compare_maxlen = parse_int(toks[i + 2], no);
                }
                job.commands.push_back(std::move(cmd));
            } else if (c == "homext") {
                if (toks.size() != 3) throw ParseError("expected: homext <fileA> <fileB>", no);
                job.commands.push_back(CmdHomExt{toks[1], toks[2]});
            } else if (c == "berezinian") {
                if (toks.size() != 3 || toks[1] != "edge")
                    throw ParseError("expected: berezinian edge <e>", no);
                job.commands.push_back(CmdBerezinian{q.edge_index(toks[2])});
            } else {
                throw ParseError("unknown command '" + c + "'", no);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(e.what(), no);
        }
    }
    return job;
}

ConcreteSuperRep parse_rep_file(const Quiver& q, const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int no = 0;
    ConcreteSuperRep rep;
    rep.sdim.assign(q.vertex_count(), SDim{0, 0});
    rep.mats.assign(q.edge_count(), {});
    std::vector<bool> sdim_seen(q.vertex_count(), false), mat_seen(q.edge_count(), false);
    while (std::getline(is, line)) {
        ++no;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "sdim") {
            if (toks.size() != 3) throw ParseError("expected: sdim <vertex> <p>|<q>", no);
            int v = q.vertex_index(toks[1]);
            rep.sdim[v] = parse_sdim(toks[2], no);
            sdim_seen[v] = true;
        } else if (toks[0] == "mat") {
            if (toks.size() < 4 || toks[2] != "=")
                throw ParseError("expected: mat <edge> = [[...],[...]]", no);
            int e = q.edge_index(toks[1]);
            std::string body = join_from(toks, 3);
            // strip whitespace
            std::string compact;
            for (char ch : body)
                if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
            if (compact.size() < 4 || compact.front() != '[' || compact.back() != ']')
                throw ParseError("matrix must look like [[a,b],[c,d]]", no);
            RatMatrix m;
            std::size_t pos = 1;
            while (pos < compact.size() - 1) {
                if (compact[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (compact[pos] != '[') throw ParseError("expected '[' starting a row", no);
                auto close = compact.find(']', pos);
                if (close == std::string::npos) throw ParseError("unterminated row", no);
                std::string row_text = compact.substr(pos + 1, close - pos - 1);
                std::vector<Rational> row;
                if (!row_text.empty()) {
                    std::size_t p2 = 0;
                    while (p2 < row_text.size()) {
                        auto comma = row_text.find(',', p2);
                        std::string cell = row_text.substr(
                            p2, comma == std::string::npos ? std::string::npos : comma - p2);
                        row.push_back(parse_rational(cell, no));
                        if (comma == std::string::npos) break;
                        p2 = comma + 1;
                    }
                }
                m.push_back(std::move(row));
                pos = close + 1;
            }
            rep.mats[e] = std::move(m);
            mat_seen[e] = true;
        } else {
            throw ParseError("unknown rep-file line '" + toks[0] + "'", no);
        }
    }
    for (int v = 0; v < q.vertex_count(); ++v)
        if (!sdim_seen[v])
            throw ParseError("rep file misses sdim for vertex " + q.vertex_id(v));
    for (int e = 0; e < q.edge_count(); ++e)
        if (!mat_seen[e]) throw ParseError("rep file misses matrix for edge " + q.edge_id(e));
    validate_rep(q, rep);
    return rep;
}

namespace {

struct Runner {
    const JobFile& job;
    const RunOptions& opts;
    std::ostream& out;
    std::map<std::string, Polynomial> named;
    bool any_fail = false;
    bool any_cap = false;
    std::vector<std::string> csv_rows;

    const Polynomial& poly(const std::string& name) {
        auto it = named.find(name);
        if (it == named.end()) throw std::invalid_argument("undefined polynomial '" + name + "'");
        return it->second;
    }

    void operator()(const CmdPaths& c) {
        auto paths = enumerate_closed_paths(job.setup.quiver, c.maxlen);
        out << "closed paths up to length " << c.maxlen << ": " << paths.size() << "\n";
        for (const Path& p : paths) {
            out << "  path";
            for (int e : p.edges) out << " " << job.setup.quiver.edge_id(e);
            out << "\n";
        }
    }

    void operator()(const CmdRingel& c) {
        const SuperDimVector& beta = c.beta ? *c.beta : job.setup.alpha;
        out << "ringel " << ringel_form(job.setup.quiver, job.setup.alpha, beta) << "\n";
    }

    void operator()(const CmdClassify&) {
        const Quiver& q = job.setup.quiver;
        for (int v = 0; v < q.vertex_count(); ++v) {
            VertexClass cl = classify_vertex(q, job.setup.alpha, v);
            out << "vertex " << q.vertex_id(v) << ": " << (cl.source ? "source" : "")
                << (cl.sink ? "sink" : "") << (!cl.source && !cl.sink ? "interior" : "") << " "
                << (cl.extremal ? "extremal" : "ordinary") << " in=" << cl.in_degree
                << " out=" << cl.out_degree
                << " kirchhoff=" << (kirchhoff_ok(q, v) ? "ok" : "violated") << "\n";
        }
    }

    void operator()(const CmdNormalize& c) {
        Normalized n = normalize_at(job.setup, c.vertex);
        const Quiver& q = n.setup.quiver;
        out << "# normalized at " << job.setup.quiver.vertex_id(c.vertex) << "\n";
        for (int v = 0; v < q.vertex_count(); ++v)
            out << "vertex " << q.vertex_id(v) << " sdim " << n.setup.alpha[v].even << "|"
                << n.setup.alpha[v].odd << " parity " << int(n.setup.parity[v]) << "\n";
        for (int e = 0; e < q.edge_count(); ++e)
            out << "edge " << q.edge_id(e) << " " << q.vertex_id(q.tail(e)) << " -> "
                << q.vertex_id(q.head(e)) << "\n";
    }

    void operator()(const CmdStraces& c) {
        int idx = 0;
        for (const Path& p : enumerate_closed_paths(job.setup.quiver, c.maxlen)) {
            Polynomial f = strace_invariant(job.ctx, p);
            std::string name = "str" + std::to_string(++idx);
            named.insert_or_assign(name, f);
            out << name << " = str(";
            for (std::size_t i = 0; i < p.edges.size(); ++i)
                out << (i ? " " : "") << job.setup.quiver.edge_id(p.edges[i]);
            out << ") = " << print_polynomial(f) << "\n";
        }
        if (idx == 0) out << "no closed paths\n";
    }

    void operator()(const CmdPolyDef& c) {
        named.insert_or_assign(c.name, c.value);
        out << c.name << " = " << print_polynomial(c.value) << "\n";
    }

    void operator()(const CmdDetlike& c) {
        DetLikeResult r = detlike_semi_invariant(job.ctx, c.spec);
        named.insert_or_assign(c.name, r.det);
        out << c.name << " = " << print_polynomial(r.det) << "\n";
        out << "  " << verdict_line(job.setup, LieVerdict{}, &r.weight) << "\n";
        for (std::size_t i = 0; i < r.components.size(); ++i) {
            std::string cname = c.name + "[" + std::to_string(i) + "]";
            named.insert_or_assign(cname, r.components[i].second);
            out << "  " << cname << " @ "
                << print_multidegree(job.setup.quiver, r.components[i].first) << " = "
                << print_polynomial(r.components[i].second) << "\n";
        }
    }

    void operator()(const CmdPolarizeSplit& c) {
        PolarizeResult r = polarize(poly(c.poly), c.split);
        out << "polarize " << c.poly << " -> " << print_polynomial(r.value) << "\n";
    }

    void operator()(const CmdPolarizeCheck& c) {
        bool ok = linearize_and_restitute_check(poly(c.poly), c.t_edges);
        Rational factor(1);
        const MultiDegree n = *poly(c.poly).multidegree();
        for (int e : c.t_edges)
            for (int k = 2; k <= n[e]; ++k) factor *= k;
        out << "polarize check " << c.poly << ": " << (ok ? "OK" : "FAIL") << " factor "
            << factor.get_str() << "\n";
        if (!ok) any_fail = true;
    }

    void operator()(const CmdCheckInvariant& c) {
        LieVerdict v = is_sl_invariant(job.ctx, poly(c.poly));
        out << "check invariant " << c.poly << ": " << verdict_line(job.setup, v);
        if (!v.ok) {
            out << " residual=" << print_polynomial(v.residual);
            any_fail = true;
        }
        out << "\n";
    }

    void operator()(const CmdCheckWeight& c) {
        LieVerdict v = check_weight(job.ctx, poly(c.poly), c.weight);
        out << "check weight " << c.poly << ": ";
        if (v.ok)
            out << verdict_line(job.setup, v, &c.weight) << " OK";
        else {
            out << verdict_line(job.setup, v) << " residual=" << print_polynomial(v.residual);
            any_fail = true;
        }
        out << "\n";
    }

    void operator()(const CmdOracle& c) {
        OracleOptions oo;
        oo.monomial_cap = opts.cap;
        ComponentReport r = oracle_component(job.ctx, c.degree, c.compare_maxlen, oo);
        out << report_line(job.setup.quiver, r) << "\n";
        if (r.verdict == "FAIL") any_fail = true;
        if (r.capped) any_cap = true;
        csv_rows.push_back(report_csv_row(job.setup.quiver, r));
    }

    void operator()(const CmdHomExt& c) {
        auto load = [&](const std::string& rel) {
            std::string path = rel;
            if (!opts.base_dir.empty() && rel.find('/') != 0) path = opts.base_dir + "/" + rel;
            std::ifstream f(path);
            if (!f) throw std::invalid_argument("cannot open rep file " + path);
            std::ostringstream ss;
            ss << f.rdbuf();
            return parse_rep_file(job.setup.quiver, ss.str());
        };
        ConcreteSuperRep v = load(c.file_a);
        ConcreteSuperRep w = load(c.file_b);
        HomExt he = hom_ext_dims(job.setup.quiver, v, w);
        long long form = ringel_form(job.setup.quiver, v.sdim, w.sdim);
        long doubled = hom_dim_via_doubling(job.setup.quiver, v, w);
        bool ok = (doubled == he.hom);
        out << "homext hom=" << he.hom << " ext=" << he.ext << " form=" << form
            << " doubled=" << doubled << (ok ? " CONSISTENT" : " MISMATCH") << "\n";
        if (!ok) any_fail = true;
    }

    void operator()(const CmdBerezinian& c) {
        auto table = std::make_shared<DenomTable>();
        SuperMatrix<Polynomial> x = generic_matrix(job.ctx, c.edge);
        EvenFraction ber = berezinian(x, table);
        out << "berezinian " << job.setup.quiver.edge_id(c.edge) << " = " << print_fraction(ber)
            << "\n";
    }
};

} // namespace

int run_job(const JobFile& job, const RunOptions& opts, std::ostream& out) {
    Runner r{job, opts, out, {}, false, false, {}};
    for (const Command& cmd : job.commands)
        std::visit([&r](const auto& c) { r(c); }, cmd);
    if (!opts.csv_path.empty() && !r.csv_rows.empty()) {
        std::ofstream csv(opts.csv_path);
        csv << report_csv_header() << "\n";
        for (const std::string& row : r.csv_rows) csv << row << "\n";
    }
    if (r.any_fail) return 1;
    if (r.any_cap && opts.strict) return 3;
    return 0;
}

} // namespace squint
