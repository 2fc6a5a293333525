// Command-line front end: build Coxeter racks, check rack tables and compute
// PR / cp counting invariants of link diagrams.

#include <coxrack/coxrack.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace coxrack;
using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A ParseError with the offending file name in front.
class FileParseError : public std::runtime_error {
public:
    FileParseError(const std::string &path, const ParseError &e) : std::runtime_error(path + ": " + e.what()) {}
};

struct SpecFlags {
    std::optional<std::int64_t> modulus;
    std::optional<std::int64_t> dim;
    std::optional<std::int64_t> alpha;
    std::optional<std::string> form;

    bool any() const { return modulus || dim || alpha || form; }

    CoxeterSpec spec() const
    {
        if (!(modulus && dim && alpha && form))
            throw UsageError("--modulus, --dim, --alpha and --form must be given together");
        if (*dim < 1)
            throw UsageError("--dim must be positive");
        Modulus n(*modulus);
        return CoxeterSpec(n, static_cast<std::size_t>(*dim), *alpha, parse_form(*form, n));
    }
};

void add_spec_flags(CLI::App *cmd, SpecFlags &flags)
{
    cmd->add_option("--modulus", flags.modulus, "n in Z/nZ");
    cmd->add_option("--dim", flags.dim, "dimension m of (Z/nZ)^m");
    cmd->add_option("--alpha", flags.alpha, "unit scalar alpha");
    cmd->add_option("--form", flags.form, "symmetric form, rows split by ';', entries by ','");
}

// "cr:<n>:<m>:<alpha>:<form>" or a rack matrix file.
FiniteRack load_rack_source(const std::string &source)
{
    if (source.rfind("cr:", 0) == 0) {
        std::vector<std::string> parts;
        std::stringstream in(source.substr(3));
        for (std::string p; std::getline(in, p, ':');)
            parts.push_back(p);
        if (parts.size() != 4)
            throw UsageError("expected cr:<n>:<m>:<alpha>:<form>, got '" + source + "'");
        try {
            SpecFlags f{std::stoll(parts[0]), std::stoll(parts[1]), std::stoll(parts[2]), parts[3]};
            return build_coxeter_rack(f.spec());
        } catch (const std::invalid_argument &) {
            throw UsageError("malformed Coxeter spec '" + source + "'");
        }
    }
    std::ifstream in(source);
    if (!in)
        throw UsageError("cannot open rack file '" + source + "'");
    try {
        return load_rack(in);
    } catch (const ParseError &e) {
        throw FileParseError(source, e);
    }
}

FiniteRack resolve_rack(const std::optional<std::string> &rack_path, const SpecFlags &flags)
{
    if (rack_path && flags.any())
        throw UsageError("give either --rack or the Coxeter spec flags, not both");
    if (rack_path)
        return load_rack_source(*rack_path);
    if (flags.any())
        return build_coxeter_rack(flags.spec());
    throw UsageError("a rack is required: --rack <file|cr:n:m:alpha:form> or --modulus/--dim/--alpha/--form");
}

LinkDiagram load_diagram(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open diagram file '" + path + "'");
    try {
        return parse_diagram(in);
    } catch (const ParseError &e) {
        throw FileParseError(path, e);
    }
}

std::vector<std::uint64_t> parse_framing(const std::string &text)
{
    std::vector<std::uint64_t> out;
    std::stringstream in(text);
    for (std::string part; std::getline(in, part, ',');) {
        std::size_t used = 0;
        long long v = -1;
        try {
            v = std::stoll(part, &used);
        } catch (const std::exception &) {
        }
        if (v < 0 || used != part.size())
            throw UsageError("framing entries must be non-negative integers, got '" + part + "'");
        out.push_back(static_cast<std::uint64_t>(v));
    }
    return out;
}

json table_json(const OpTable &table)
{
    json rows = json::array();
    for (const auto &row : table) {
        json r = json::array();
        for (auto x : row)
            r.push_back(x + 1);
        rows.push_back(r);
    }
    return rows;
}

json rack_json(const FiniteRack &rack)
{
    json out{{"size", rack.size()}, {"matrix", table_json(rack.table())}};
    if (rack.module_data() && rack.labels()) {
        const auto &m = *rack.module_data();
        json labels = json::array();
        for (const auto &v : *rack.labels())
            labels.push_back(v.entries());
        out["labels"] = labels;
        out["module"] = {{"modulus", m.modulus.value()}, {"dim", m.dim}, {"alpha", m.alpha}, {"form", m.form.rows()}};
    }
    return out;
}

struct Output {
    std::string path;
    std::string format = "text";

    void emit(const std::string &text, const json &doc) const
    {
        std::ofstream file;
        std::ostream *out = &std::cout;
        if (!path.empty() && path != "-") {
            file.open(path);
            if (!file)
                throw UsageError("cannot write '" + path + "'");
            out = &file;
        }
        if (format == "json")
            *out << doc.dump(2) << '\n';
        else
            *out << text;
    }
};

void add_output_flags(CLI::App *cmd, Output &out)
{
    cmd->add_option("-o,--output", out.path, "write to a file instead of standard output");
    cmd->add_option("--format", out.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Generalized Coxeter racks over (Z/nZ)^m and their link invariants"};
    app.require_subcommand(1);

    SpecFlags flags;
    Output output;
    std::optional<std::string> rack_path;
    std::vector<std::string> iso_racks;
    std::string diagram_path;
    std::string framing_text;

    auto *build = app.add_subcommand("build", "construct CR((Z/nZ)^m, alpha, A) and print its rack matrix and labels");
    add_spec_flags(build, flags);
    add_output_flags(build, output);

    auto rack_verb = [&](const char *name, const char *help) {
        auto *cmd = app.add_subcommand(name, help);
        cmd->add_option("--rack", rack_path, "rack matrix file or cr:<n>:<m>:<alpha>:<form>");
        add_spec_flags(cmd, flags);
        add_output_flags(cmd, output);
        return cmd;
    };
    auto *verify = rack_verb("verify", "check both rack axioms");
    auto *rank = rack_verb("rank", "print the rack rank N(T)");
    auto *rackpoly = rack_verb("rackpoly", "print the rack polynomial");

    auto *iso = app.add_subcommand("iso", "search for an isomorphism between two racks");
    iso->add_option("--rack", iso_racks, "two rack sources")->required()->expected(2);
    add_output_flags(iso, output);

    auto diagram_verb = [&](const char *name, const char *help) {
        auto *cmd = rack_verb(name, help);
        cmd->add_option("--diagram", diagram_path, "crossing-code diagram file")->required();
        return cmd;
    };
    auto *pr = diagram_verb("pr", "polynomial rack counting invariant PR(L,T)");
    auto *cp = diagram_verb("cp", "Coxeter enhanced rack counting invariant cp(L,T)");
    auto *colorings = diagram_verb("colorings", "list every coloring at one framing class");
    colorings->add_option("--framing", framing_text, "writhe residues mod N, one per component, e.g. 1,1")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            auto rack = build_coxeter_rack(flags.spec());
            std::ostringstream text;
            write_rack(text, rack);
            output.emit(text.str(), rack_json(rack));
        } else if (verify->parsed()) {
            OpTable table;
            if (rack_path && !flags.any() && rack_path->rfind("cr:", 0) != 0) {
                std::ifstream in(*rack_path);
                if (!in)
                    throw UsageError("cannot open rack file '" + *rack_path + "'");
                try {
                    table = read_rack_matrix(in).table;
                } catch (const ParseError &e) {
                    throw FileParseError(*rack_path, e);
                }
            } else {
                table = resolve_rack(rack_path, flags).table();
            }
            auto report = verify_rack(table);
            std::string text = report.valid() ? "valid\n" : "invalid\n";
            json violations = json::array();
            for (const auto &v : report.violations) {
                text += v.describe() + '\n';
                violations.push_back(v.describe());
            }
            if (report.total_violations > report.violations.size())
                text += "... " + std::to_string(report.total_violations - report.violations.size()) +
                        " more violations\n";
            output.emit(text, {{"valid", report.valid()},
                               {"total_violations", report.total_violations},
                               {"violations", violations}});
            return report.valid() ? 0 : 1;
        } else if (rank->parsed()) {
            auto n = rack_rank(resolve_rack(rack_path, flags));
            output.emit(std::to_string(n) + '\n', {{"rank", n}});
        } else if (rackpoly->parsed()) {
            auto p = rack_polynomial(resolve_rack(rack_path, flags));
            output.emit(p.to_string() + '\n', p.to_json());
        } else if (iso->parsed()) {
            auto a = load_rack_source(iso_racks[0]);
            auto b = load_rack_source(iso_racks[1]);
            auto phi = find_isomorphism(a, b);
            std::string text;
            json doc{{"isomorphic", phi.has_value()}};
            if (!phi) {
                text = "none\n";
            } else {
                json map = json::array();
                for (std::size_t i = 0; i < phi->size(); ++i) {
                    text += std::to_string(i + 1) + " -> " + std::to_string((*phi)[i] + 1) + '\n';
                    map.push_back((*phi)[i] + 1);
                }
                doc["map"] = map;
            }
            output.emit(text, doc);
        } else if (pr->parsed() || cp->parsed()) {
            auto rack = resolve_rack(rack_path, flags);
            auto d = load_diagram(diagram_path);
            auto p = pr->parsed() ? pr_invariant(d, rack) : cp_invariant(d, rack);
            output.emit(p.to_string() + '\n', p.to_json());
        } else if (colorings->parsed()) {
            auto rack = resolve_rack(rack_path, flags);
            auto d = load_diagram(diagram_path);
            auto framing = parse_framing(framing_text);
            if (framing.size() != d.components().size())
                throw UsageError("--framing has " + std::to_string(framing.size()) + " entries but the diagram has " +
                                 std::to_string(d.components().size()) + " components");
            auto kinks = base_arc_kinks(d, framing_deltas(d, framing, rack_rank(rack)));

            // Kink arcs follow their base arc: x, x+1, ..., x+delta.
            std::vector<std::string> header;
            for (std::size_t a = 0; a < d.arc_count(); ++a) {
                header.push_back(d.arc_name(a));
                for (std::uint64_t j = 1; j <= kinks[a]; ++j)
                    header.push_back(d.arc_name(a) + "+" + std::to_string(j));
            }
            std::string text;
            for (std::size_t i = 0; i < header.size(); ++i)
                text += (i ? " " : "") + header[i];
            text += '\n';
            json rows = json::array();
            for (const auto &f : enumerate_colorings_with_kinks(d, kinks, rack)) {
                json row = json::array();
                for (std::size_t a = 0; a < d.arc_count(); ++a)
                    for (std::uint64_t j = 0; j <= kinks[a]; ++j)
                        row.push_back(diagonal_map(rack, f.colors[a], static_cast<std::int64_t>(j)) + 1);
                for (std::size_t i = 0; i < row.size(); ++i)
                    text += (i ? " " : "") + std::to_string(row[i].get<std::size_t>());
                text += '\n';
                rows.push_back(row);
            }
            output.emit(text, {{"framing", framing}, {"arcs", header}, {"colorings", rows}});
        }
    } catch (const FileParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ModuleDataRequired &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
