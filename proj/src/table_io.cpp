#include "loops/table_io.hpp"

#include <charconv>
#include <sstream>

namespace loops {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

bool is_comment_or_blank(std::string_view s) {
    for (char c : s) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;  // blank
}

std::vector<Line> significant_lines(std::string_view text, int& line_count) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw = nl == std::string_view::npos
                                   ? text.substr(pos)
                                   : text.substr(pos, nl - pos);
        if (nl == std::string_view::npos && raw.empty()) break;
        ++number;
        if (!is_comment_or_blank(raw)) {
            Line ln;
            ln.number = number;
            std::istringstream ss{std::string(raw)};
            std::string tok;
            while (ss >> tok) ln.tokens.push_back(tok);
            out.push_back(std::move(ln));
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    line_count = number;
    return out;
}

int parse_int(const std::string& tok, int line, const std::string& what) {
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw SyntaxError(line, "invalid " + what + " '" + tok + "'");
    return value;
}

}  // namespace

ParsedTable parse_table_file(std::string_view text) {
    int total_lines = 0;
    std::vector<Line> lines = significant_lines(text, total_lines);
    std::size_t i = 0;

    if (i >= lines.size())
        throw SyntaxError(total_lines + 1, "expected 'order N'");
    if (lines[i].tokens[0] != "order" || lines[i].tokens.size() != 2)
        throw SyntaxError(lines[i].number, "expected 'order N'");
    int n = parse_int(lines[i].tokens[1], lines[i].number, "order");
    if (n < 1 || n > kMaxOrder)
        throw SyntaxError(lines[i].number,
                          "order must be between 1 and " +
                              std::to_string(kMaxOrder));
    ++i;

    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r, ++i) {
        if (i >= lines.size())
            throw SyntaxError(total_lines + 1,
                              "expected " + std::to_string(n) + " rows");
        const Line& ln = lines[i];
        if (ln.tokens[0] == "order")
            throw SyntaxError(ln.number, "duplicate order line");
        if (ln.tokens[0] == "subloop")
            throw SyntaxError(ln.number,
                              "expected " + std::to_string(n) + " rows");
        if (int(ln.tokens.size()) != n)
            throw SyntaxError(ln.number, "expected " + std::to_string(n) +
                                             " entries in row " +
                                             std::to_string(r));
        for (int c = 0; c < n; ++c) {
            int v = parse_int(ln.tokens[static_cast<std::size_t>(c)], ln.number, "entry");
            if (v < 0 || v >= n)
                throw SyntaxError(ln.number,
                                  "entry out of range at (" + std::to_string(r) +
                                      "," + std::to_string(c) +
                                      "): " + std::to_string(v));
            entries.push_back(v);
        }
    }

    std::optional<std::vector<Elem>> subloop;
    for (; i < lines.size(); ++i) {
        const Line& ln = lines[i];
        if (ln.tokens[0] == "order")
            throw SyntaxError(ln.number, "duplicate order line");
        if (ln.tokens[0] != "subloop")
            throw SyntaxError(ln.number, "unexpected content");
        if (subloop)
            throw SyntaxError(ln.number, "duplicate subloop line");
        if (ln.tokens.size() < 2)
            throw SyntaxError(ln.number, "subloop line needs elements");
        std::vector<Elem> h;
        for (std::size_t k = 1; k < ln.tokens.size(); ++k) {
            int v = parse_int(ln.tokens[k], ln.number, "subloop element");
            if (v < 0 || v >= n)
                throw SyntaxError(ln.number, "subloop element out of range: " +
                                                 std::to_string(v));
            h.push_back(Elem(v));
        }
        subloop = std::move(h);
    }

    return ParsedTable{build_table(n, entries), std::move(subloop)};
}

std::string serialize_table(const CayleyTable& t,
                            const std::optional<std::vector<Elem>>& subloop) {
    std::string out = "order " + std::to_string(t.order()) + "\n";
    for (int x = 0; x < t.order(); ++x) {
        for (int y = 0; y < t.order(); ++y) {
            if (y) out += ' ';
            out += std::to_string(int(t.at(x, y)));
        }
        out += '\n';
    }
    if (subloop) {
        out += "subloop";
        for (Elem v : *subloop) out += ' ' + std::to_string(int(v));
        out += '\n';
    }
    return out;
}

std::string serialize_finding(const Finding& f) {
    std::string out;
    out += "# source: order " + std::to_string(f.order) + " index " +
           std::to_string(f.loop_index) +
           (f.exhaustive ? " (exhaustive scan)\n" : " (sampled scan)\n");
    auto flag = [](bool b) { return b ? "1" : "0"; };
    out += std::string("# flags: S2_BOL=") + flag(f.flags.s2_bol) +
           " BOL=" + flag(f.flags.bol) + " S2_RIP=" + flag(f.flags.s2_rip) +
           " S2_RAP=" + flag(f.flags.s2_rap) +
           " EXPONENT2=" + flag(f.flags.exponent2) + "\n";
    out += serialize_table(f.loop.table(), f.subloop);
    return out;
}

void Report::add(std::string key, std::string value) {
    kv_.emplace_back(std::move(key), std::move(value));
}

void Report::add(std::string key, std::uint64_t value) {
    kv_.emplace_back(std::move(key), std::to_string(value));
}

std::string Report::text() const {
    std::string out;
    for (const auto& [k, v] : kv_) {
        out += k;
        out += ": ";
        out += v;
        out += '\n';
    }
    return out;
}

std::string witness_string(const std::vector<int>& witness) {
    std::string out;
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(witness[i]);
    }
    return out;
}

std::string counterexample_string(const Counterexample& cex) {
    std::string out = cex.what;
    if (!cex.elems.empty()) out += " at " + witness_string(cex.elems);
    for (const Permutation& p : cex.maps) {
        out += " [";
        for (int i = 0; i < p.order(); ++i) {
            if (i) out += ' ';
            out += std::to_string(int(p(i)));
        }
        out += ']';
    }
    return out;
}

void render_sweep_report(const SweepReport& r, Report& out) {
    out.add("count.corpus", r.corpus_size);
    for (const auto& [tag, tally] : r.tallies) {
        std::string v = "applicable=" + std::to_string(tally.applicable) +
                        " held=" + std::to_string(tally.held) +
                        " failed=" + std::to_string(tally.failed) +
                        " not_applicable=" + std::to_string(tally.not_applicable);
        out.add(std::string("theorem.") + theorem_name(tag), v);
    }
    for (const SweepFailure& f : r.failures)
        out.add(std::string("witness.") + theorem_name(f.theorem),
                "corpus=" + std::to_string(f.corpus_index) + " " +
                    counterexample_string(f.cex));
}

}  // namespace loops
