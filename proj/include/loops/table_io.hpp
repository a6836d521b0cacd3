#pragma once

// Text formats: the table file grammar, the line-oriented report document,
// and serialization of search findings.
//
// Table files:
//   # optional comments
//   order N
//   N rows of N space-separated integers
//   subloop i j k ...        (optional)
//
// Reports are "key: value" lines with the stable key set
// {order, subloop, property.<tag>, witness.<tag>, theorem.<tag>,
//  count.<kind>, time_ms}; time_ms is always the last line and the only
// line that may differ between identical runs.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loops/cayley.hpp"
#include "loops/enumerate.hpp"
#include "loops/theorems.hpp"

namespace loops {

struct SyntaxError : LoopError {
    int line;
    std::string message;
    SyntaxError(int ln, std::string msg)
        : LoopError("line " + std::to_string(ln) + ": " + msg),
          line(ln), message(std::move(msg)) {}
};

struct ParsedTable {
    CayleyTable table;
    std::optional<std::vector<Elem>> subloop;
};

ParsedTable parse_table_file(std::string_view text);

std::string serialize_table(const CayleyTable& t,
                            const std::optional<std::vector<Elem>>& subloop = {});

std::string serialize_finding(const Finding& f);

class Report {
public:
    void add(std::string key, std::string value);
    void add(std::string key, std::uint64_t value);
    const std::vector<std::pair<std::string, std::string>>& lines() const {
        return kv_;
    }
    std::string text() const;

private:
    std::vector<std::pair<std::string, std::string>> kv_;
};

// Aggregate theorem-sweep tallies in report form (one theorem.<tag> line per
// tag, then one witness.<tag> line per failure).
void render_sweep_report(const SweepReport& r, Report& out);

std::string witness_string(const std::vector<int>& witness);
std::string counterexample_string(const Counterexample& cex);

}  // namespace loops
