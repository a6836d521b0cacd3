// Command-line surface of the toolkit.
//
//   looptool check FILE        decide identities on a loop / special loop
//   looptool autotopisms FILE  enumerate an autotopism set and test group axioms
//   looptool verify FILE       run the structural-claim catalog
//   looptool enumerate         generate loops / search for restricted-Bol carriers
//
// Exit status: 0 all selected checks passed, 1 some check failed,
// 2 malformed input or unsupported request.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "loops/autotopism.hpp"
#include "loops/enumerate.hpp"
#include "loops/properties.hpp"
#include "loops/subloop.hpp"
#include "loops/table_io.hpp"
#include "loops/theorems.hpp"

namespace {

using namespace loops;
namespace fs = std::filesystem;

struct Timer {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    std::uint64_t ms() const {
        return std::uint64_t(
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count());
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoopError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string subset_string(const std::vector<Elem>& subset) {
    std::string out;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(int(subset[i]));
    }
    return out;
}

// File subloop line, overridden by --subloop, defaulting to the whole carrier.
SpecialLoop load_special(const std::string& path,
                         const std::vector<int>& subloop_flag) {
    ParsedTable parsed = parse_table_file(slurp(path));
    Loop l = as_loop(parsed.table);
    std::vector<int> subset;
    if (!subloop_flag.empty()) {
        subset = subloop_flag;
    } else if (parsed.subloop) {
        subset.assign(parsed.subloop->begin(), parsed.subloop->end());
    } else {
        for (int x = 0; x < l.order(); ++x) subset.push_back(x);
    }
    return SpecialLoop::make(std::move(l), std::move(subset));
}

int cmd_check(const std::string& path, const std::vector<int>& subloop_flag,
              const std::vector<std::string>& prop_names, int max_n) {
    Timer timer;
    SpecialLoop gh = load_special(path, subloop_flag);
    std::vector<Prop> props;
    if (prop_names.empty()) {
        props.assign(std::begin(kAllProps), std::end(kAllProps));
    } else {
        for (const std::string& name : prop_names) {
            auto p = prop_from_name(name);
            if (!p) throw UnsupportedProperty();
            props.push_back(*p);
        }
    }
    Report report;
    report.add("order", std::to_string(gh.order()));
    report.add("subloop", subset_string(gh.subset()));
    bool all_hold = true;
    std::vector<std::pair<std::string, std::string>> witnesses;
    for (Prop p : props) {
        CheckResult res = check(gh, PropertyId(p, max_n));
        report.add(std::string("property.") + prop_name(p),
                   res.holds ? "holds" : "fails");
        if (!res.holds) {
            all_hold = false;
            std::string w = witness_string(*res.witness);
            if (res.witness_prop != p)
                w += std::string(" (") + prop_name(res.witness_prop) + ")";
            witnesses.emplace_back(std::string("witness.") + prop_name(p), w);
        }
    }
    for (auto& [k, v] : witnesses) report.add(k, v);
    report.add("time_ms", timer.ms());
    std::cout << report.text();
    return all_hold ? 0 : 1;
}

int cmd_autotopisms(const std::string& path,
                    const std::vector<int>& subloop_flag,
                    const std::string& kind_name, bool list) {
    Timer timer;
    SpecialLoop gh = load_special(path, subloop_flag);
    TripleKind kind;
    std::string kind_tag;
    if (kind_name == "full") { kind = TripleKind::FULL; kind_tag = "FULL"; }
    else if (kind_name == "right") { kind = TripleKind::RIGHT; kind_tag = "RIGHT"; }
    else if (kind_name == "left") { kind = TripleKind::LEFT; kind_tag = "LEFT"; }
    else throw LoopError("unknown kind: " + kind_name);

    std::vector<AutotopismTriple> triples = enumerate_triples(gh, kind);

    auto perm_str = [](const Permutation& p) {
        std::string s = "[";
        for (int i = 0; i < p.order(); ++i) {
            if (i) s += ' ';
            s += std::to_string(int(p(i)));
        }
        return s + "]";
    };
    if (list) {
        for (std::size_t i = 0; i < triples.size(); ++i)
            std::cout << "# triple " << i << ": U=" << perm_str(triples[i].u)
                      << " V=" << perm_str(triples[i].v)
                      << " W=" << perm_str(triples[i].w) << "\n";
    }

    // group-axiom check on the enumerated set
    std::map<std::pair<std::vector<Elem>, std::vector<Elem>>, std::vector<Elem>>
        index;
    for (const AutotopismTriple& t : triples)
        index[{t.u.image(), t.v.image()}] = t.w.image();
    Permutation id = Permutation::identity(gh.order());
    std::uint64_t identity_present =
        index.count({id.image(), id.image()}) ? 1 : 0;
    std::uint64_t inverse_escapes = 0, composition_escapes = 0;
    for (const AutotopismTriple& t : triples) {
        AutotopismTriple ti = invert_triple(t);
        auto it = index.find({ti.u.image(), ti.v.image()});
        if (it == index.end() || it->second != ti.w.image()) ++inverse_escapes;
    }
    for (const AutotopismTriple& a : triples)
        for (const AutotopismTriple& b : triples) {
            AutotopismTriple ab = compose_triples(a, b);
            auto it = index.find({ab.u.image(), ab.v.image()});
            if (it == index.end() || it->second != ab.w.image())
                ++composition_escapes;
        }

    Report report;
    report.add("order", std::to_string(gh.order()));
    report.add("subloop", subset_string(gh.subset()));
    report.add("count." + kind_tag, std::uint64_t(triples.size()));
    report.add("count." + kind_tag + "_IDENTITY", identity_present);
    report.add("count." + kind_tag + "_INVERSE_ESCAPES", inverse_escapes);
    report.add("count." + kind_tag + "_COMPOSITION_ESCAPES", composition_escapes);
    report.add("time_ms", timer.ms());
    std::cout << report.text();
    bool group_ok =
        identity_present == 1 && !inverse_escapes && !composition_escapes;
    return group_ok ? 0 : 1;
}

int cmd_verify(const std::string& path, const std::vector<int>& subloop_flag,
               const std::vector<std::string>& tag_names, int bounds,
               int search_order) {
    Timer timer;
    SpecialLoop gh = load_special(path, subloop_flag);
    std::vector<TheoremId> tags;
    if (tag_names.empty()) {
        tags.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
    } else {
        for (const std::string& name : tag_names) {
            auto t = theorem_from_name(name);
            if (!t) throw LoopError("unknown theorem tag: " + name);
            tags.push_back(*t);
        }
    }
    VerifyBounds vb;
    vb.exponent = bounds;
    vb.search_max_order = search_order;

    Report report;
    report.add("order", std::to_string(gh.order()));
    report.add("subloop", subset_string(gh.subset()));
    bool any_failed = false;
    std::vector<std::pair<std::string, std::string>> witnesses;
    std::string notes;
    for (TheoremId tag : tags) {
        Verdict v = verify(gh, tag, vb);
        const char* status = !v.applicable ? "not-applicable"
                             : *v.conclusion ? "holds"
                                             : "fails";
        report.add(std::string("theorem.") + theorem_name(tag), status);
        if (v.failed()) {
            any_failed = true;
            witnesses.emplace_back(std::string("witness.") + theorem_name(tag),
                                   counterexample_string(*v.cex));
        }
        for (const auto& [k, val] : v.notes)
            notes += std::string("# note ") + theorem_name(tag) + " " + k +
                     ": " + val + "\n";
    }
    for (auto& [k, v] : witnesses) report.add(k, v);
    report.add("time_ms", timer.ms());
    std::cout << notes << report.text();
    return any_failed ? 1 : 0;
}

int cmd_enumerate(int order, const std::string& filter,
                  const std::string& out) {
    Timer timer;
    Report report;
    report.add("order", std::to_string(order));
    bool write = !out.empty();
    if (write) fs::create_directories(out);

    auto path_for = [&](const char* stem, std::uint64_t i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%s_%06llu.table", stem,
                      static_cast<unsigned long long>(i));
        return fs::path(out) / buf;
    };

    if (filter == "all") {
        std::uint64_t count = 0;
        for_each_loop(order, [&](const Loop& l) {
            ++count;
            if (write) {
                std::ofstream f(path_for("loop", count));
                f << serialize_table(l.table());
            }
            return true;
        });
        report.add("count.loops", count);
    } else if (filter == "s2bl-not-bol") {
        SearchOptions opt;
        opt.min_order = order;
        SearchOutcome outcome = search_s2bl_not_bol(order, opt);
        const SearchOrderStats& st = outcome.per_order.back();
        if (!st.exhaustive) std::cout << "# note: sampled, non-exhaustive\n";
        std::uint64_t count = 0;
        for (const Finding& f : outcome.findings) {
            ++count;
            if (write) {
                std::ofstream file(path_for("finding", count));
                file << serialize_finding(f);
            }
        }
        report.add("count.loops", st.loops_scanned);
        report.add("count.pairs", st.pairs_scanned);
        report.add("count.findings", count);
    } else {
        throw LoopError("unknown filter: " + filter);
    }
    report.add("time_ms", timer.ms());
    std::cout << report.text();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite loop toolkit: identities, subloop-restricted Bol "
                 "properties, autotopism sets, enumeration"};
    app.require_subcommand(1);

    std::string file;
    std::vector<int> subloop_flag;
    std::vector<std::string> props;
    int max_n = 6;

    CLI::App* check_cmd =
        app.add_subcommand("check", "decide identities on a table file");
    check_cmd->add_option("file", file, "table file")->required();
    check_cmd->add_option("--subloop", subloop_flag,
                          "subloop elements (overrides the file)");
    check_cmd->add_option("--props", props,
                          "property tags (default: all)")
        ->delimiter(',');
    check_cmd->add_option("--maxn", max_n, "exponent bound for RPAP/S_RPAP");

    std::string kind = "full";
    bool list = false;
    CLI::App* auto_cmd = app.add_subcommand(
        "autotopisms", "enumerate an autotopism set and test group axioms");
    auto_cmd->add_option("file", file, "table file")->required();
    auto_cmd->add_option("--subloop", subloop_flag,
                         "subloop elements (overrides the file)");
    auto_cmd->add_option("--kind", kind, "full | right | left");
    auto_cmd->add_flag("--list", list, "print every triple");

    std::vector<std::string> tags;
    int bounds = 5;
    int search_order = 6;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the structural-claim catalog");
    verify_cmd->add_option("file", file, "table file")->required();
    verify_cmd->add_option("--subloop", subloop_flag,
                           "subloop elements (overrides the file)");
    verify_cmd->add_option("--tags", tags, "theorem tags (default: all)")
        ->delimiter(',');
    verify_cmd->add_option("--bounds", bounds, "exponent bound");
    verify_cmd->add_option("--search-order", search_order,
                           "max order for the Q2 search");

    int order = 0;
    std::string filter = "all";
    std::string out_dir;
    CLI::App* enum_cmd =
        app.add_subcommand("enumerate", "generate loops or search for "
                                        "restricted-Bol carriers");
    enum_cmd->add_option("--order", order, "loop order")->required();
    enum_cmd->add_option("--filter", filter, "all | s2bl-not-bol");
    enum_cmd->add_option("--out", out_dir, "output directory for table files");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check_cmd->parsed())
            return cmd_check(file, subloop_flag, props, max_n);
        if (auto_cmd->parsed())
            return cmd_autotopisms(file, subloop_flag, kind, list);
        if (verify_cmd->parsed())
            return cmd_verify(file, subloop_flag, tags, bounds, search_order);
        if (enum_cmd->parsed())
            return cmd_enumerate(order, filter, out_dir);
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const LoopError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
