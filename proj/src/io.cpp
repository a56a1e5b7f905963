#include "snc/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "snc/errors.hpp"

namespace snc {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Token {
    std::string text;
    int column = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        toks.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return toks;
}

/// Pulls content lines (comment lines starting '#' and blank lines are
/// skipped), tracking the 1-based source line number for diagnostics.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::vector<Token>& toks) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line[0] == '#') continue;
            toks = tokenize(line);
            if (!toks.empty()) return true;
        }
        ++line_no_;  // position reported for unexpected end of input
        return false;
    }

    int line_no() const { return line_no_; }

private:
    std::istream& in_;
    int line_no_ = 0;
};

long parse_long(const Token& tok, int line_no, const char* what) {
    long value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError(std::string("expected ") + what + ", got '" + tok.text + "'", line_no,
                         tok.column);
    return value;
}

long parse_nonneg(const Token& tok, int line_no, const char* what) {
    long value = parse_long(tok, line_no, what);
    if (value < 0)
        throw ParseError(std::string(what) + " must be nonnegative, got '" + tok.text + "'",
                         line_no, tok.column);
    return value;
}

void expect_token_count(const std::vector<Token>& toks, std::size_t want, int line_no,
                        const char* shape) {
    if (toks.size() == want) return;
    if (toks.size() > want)
        throw ParseError(std::string("unexpected extra token '") + toks[want].text +
                             "' (line shape: " + shape + ")",
                         line_no, toks[want].column);
    throw ParseError(std::string("incomplete line (line shape: ") + shape + ")", line_no,
                     toks.empty() ? 1 : toks.back().column);
}

}  // namespace

Digraph parse_digraph(std::istream& in) {
    LineReader reader(in);
    std::vector<Token> toks;
    if (!reader.next(toks)) throw ParseError("empty input, expected 'n m' header", 1, 1);
    expect_token_count(toks, 2, reader.line_no(), "n m");
    const long n = parse_nonneg(toks[0], reader.line_no(), "vertex count");
    const long m = parse_nonneg(toks[1], reader.line_no(), "arc count");

    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(m));
    for (long k = 0; k < m; ++k) {
        if (!reader.next(toks))
            throw ParseError("expected " + std::to_string(m) + " arc lines, got " +
                                 std::to_string(k),
                             reader.line_no(), 1);
        expect_token_count(toks, 2, reader.line_no(), "u v");
        const long u = parse_long(toks[0], reader.line_no(), "arc tail");
        const long v = parse_long(toks[1], reader.line_no(), "arc head");
        arcs.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    if (reader.next(toks))
        throw ParseError("unexpected content after the declared " + std::to_string(m) + " arcs",
                         reader.line_no(), toks[0].column);
    return build_digraph(static_cast<int>(n), arcs);
}

Digraph parse_digraph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_digraph(in);
}

Digraph read_digraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open digraph file: " + path);
    return parse_digraph(in);
}

std::string write_digraph(const Digraph& d) {
    std::string out = std::to_string(d.vertex_count()) + " " + std::to_string(d.arc_count()) + "\n";
    for (const Arc& a : d.arcs())
        out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
    return out;
}

RatMatrix parse_matrix(std::istream& in) {
    LineReader reader(in);
    std::vector<Token> toks;
    if (!reader.next(toks)) throw ParseError("empty input, expected 'rows cols' header", 1, 1);
    expect_token_count(toks, 2, reader.line_no(), "rows cols");
    const long rows = parse_nonneg(toks[0], reader.line_no(), "row count");
    const long cols = parse_nonneg(toks[1], reader.line_no(), "column count");

    RatMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    for (long i = 0; i < rows; ++i) {
        if (!reader.next(toks))
            throw ParseError("expected " + std::to_string(rows) + " matrix rows, got " +
                                 std::to_string(i),
                             reader.line_no(), 1);
        expect_token_count(toks, static_cast<std::size_t>(cols), reader.line_no(),
                           "one rational per column");
        for (long j = 0; j < cols; ++j) {
            try {
                m.at(static_cast<int>(i), static_cast<int>(j)) =
                    Rational::from_string(toks[static_cast<std::size_t>(j)].text);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), reader.line_no(),
                                 toks[static_cast<std::size_t>(j)].column);
            }
        }
    }
    if (reader.next(toks))
        throw ParseError("unexpected content after the declared " + std::to_string(rows) + " rows",
                         reader.line_no(), toks[0].column);
    return m;
}

RatMatrix parse_matrix_string(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

RatMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open matrix file: " + path);
    return parse_matrix(in);
}

std::string write_matrix(const RatMatrix& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ' ';
            out += m.at(i, j).str();
        }
        out += '\n';
    }
    return out;
}

RatVector matrix_to_vector(const RatMatrix& m) {
    if (m.cols() != 1)
        throw DimensionMismatch("expected a single-column matrix, got " +
                                std::to_string(m.cols()) + " columns");
    return m.column(0);
}

RatMatrix vector_to_matrix(const RatVector& v) {
    RatMatrix m(static_cast<int>(v.size()), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
    return m;
}

std::string write_vector(const RatVector& v) { return write_matrix(vector_to_matrix(v)); }

namespace {

ordered_json json_vector(const RatVector& v) {
    ordered_json arr = ordered_json::array();
    for (const Rational& x : v) arr.push_back(x.str());
    return arr;
}

ordered_json json_matrix(const RatMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json json_evidence(const Verdict& v) {
    ordered_json e = ordered_json::object();
    if (v.vertex) e["vertex"] = *v.vertex;
    if (v.vector) e["vector"] = json_vector(*v.vector);
    if (v.matrix) e["matrix"] = json_matrix(*v.matrix);
    if (!v.degree_table.empty()) {
        ordered_json table = ordered_json::array();
        for (const DegreeRow& row : v.degree_table)
            table.push_back(ordered_json::array({row.vertex, row.dplus, row.dplusplus}));
        e["degree_table"] = std::move(table);
    }
    if (v.entry) e["entry"] = ordered_json::array({v.entry->first, v.entry->second});
    return e;
}

ordered_json verdict_object(const Verdict& v, const std::string& instance) {
    ordered_json j = ordered_json::object();
    j["instance"] = instance;
    j["conjecture"] = conjecture_name(v.conjecture);
    j["status"] = status_name(v.status);
    j["evidence_kind"] = evidence_kind_name(v.kind);
    j["evidence"] = json_evidence(v);
    j["violations"] = ordered_json::array();
    return j;
}

}  // namespace

std::string verdict_json(const Verdict& v, const std::string& instance) {
    return verdict_object(v, instance).dump();
}

std::string cross_check_json_lines(const CrossCheckReport& rep) {
    std::string out;
    for (const Verdict& v : rep.verdicts) out += verdict_object(v, rep.instance).dump() + "\n";
    for (const Verdict& v : rep.reversed_verdicts)
        out += verdict_object(v, "reverse:" + rep.instance).dump() + "\n";
    ordered_json j = ordered_json::object();
    j["instance"] = rep.instance;
    j["conjecture"] = "all";
    j["status"] = rep.consistent() ? "Consistent" : "Inconsistent";
    j["evidence_kind"] = "relations";
    ordered_json rels = ordered_json::array();
    for (const RelationCheck& r : rep.relations) {
        ordered_json obj = ordered_json::object();
        obj["name"] = r.name;
        obj["pass"] = r.pass;
        rels.push_back(std::move(obj));
    }
    j["evidence"] = ordered_json::object({{"relations", std::move(rels)}});
    j["violations"] = rep.violations;
    out += j.dump() + "\n";
    return out;
}

std::string search_report_json(const SearchReport& rep) {
    ordered_json spec = ordered_json::object();
    spec["mode"] = enum_mode_name(rep.spec.mode);
    spec["n"] = rep.spec.n;
    if (rep.spec.mode == EnumMode::Random) {
        spec["samples"] = rep.spec.sample_count;
        spec["seed"] = rep.spec.seed;
        spec["p_forward"] = rep.spec.p_forward.str();
        spec["p_backward"] = rep.spec.p_backward.str();
    }
    spec["dedup"] = rep.spec.dedup;
    spec["prune"] = rep.spec.prune;

    ordered_json j = ordered_json::object();
    j["spec"] = std::move(spec);
    j["start_index"] = rep.start_index;
    j["enumerated"] = rep.enumerated;
    j["instances"] = rep.checked;
    ordered_json cx = ordered_json::object();
    for (int c = 0; c < 6; ++c)
        cx[conjecture_name(static_cast<ConjectureId>(c))] = rep.counterexamples[c];
    j["counterexamples"] = std::move(cx);
    j["violations"] = rep.violation_count;
    ordered_json vlist = ordered_json::array();
    for (const auto& [index, names] : rep.violations) {
        ordered_json obj = ordered_json::object();
        obj["instance"] = instance_label(rep.spec, index);
        obj["relations"] = names;
        vlist.push_back(std::move(obj));
    }
    j["violation_instances"] = std::move(vlist);
    return j.dump();
}

}  // namespace snc
