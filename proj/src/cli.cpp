#include "quadric/cli.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>

#include "quadric/bott.hpp"
#include "quadric/chow.hpp"
#include "quadric/classify.hpp"
#include "quadric/curves.hpp"
#include "quadric/errors.hpp"
#include "quadric/hrr.hpp"
#include "quadric/qcoh.hpp"
#include "quadric/verify.hpp"

namespace quadric::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long long parse_int(const std::string& s) {
    size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
    if (pos != s.size())
        throw UsageError("not an integer: '" + s + "'");
    return v;
}

std::vector<long long> parse_int_list(const std::string& s, size_t expected) {
    std::vector<long long> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ','))
        out.push_back(parse_int(item));
    if (out.size() != expected)
        throw UsageError("expected " + std::to_string(expected) + " comma-separated integers, got '" +
                         s + "'");
    return out;
}

// Minimal flag scanner: options are "--name value", "-n value" or bare
// positionals, collected in order.
struct Args {
    std::vector<std::string> positional;
    std::vector<std::pair<std::string, std::string>> options; // name without dashes
    bool json_output = false;

    bool has(const std::string& name) const {
        return std::any_of(options.begin(), options.end(),
                           [&](const auto& kv) { return kv.first == name; });
    }
    std::optional<std::string> get(const std::string& name) const {
        for (const auto& [k, v] : options)
            if (k == name)
                return v;
        return std::nullopt;
    }
    std::string require(const std::string& name) const {
        if (auto v = get(name))
            return *v;
        throw UsageError("missing required option --" + name);
    }
};

// Flags that take no value.
bool is_bare_flag(const std::string& name) {
    return name == "json" || name == "rank3-only" || name == "indecomposable";
}

Args parse_args(const std::vector<std::string>& argv, size_t start) {
    Args a;
    for (size_t i = start; i < argv.size(); ++i) {
        const std::string& s = argv[i];
        if (s.size() >= 2 && s[0] == '-' &&
            !std::isdigit(static_cast<unsigned char>(s[1]))) {
            std::string name = s.substr(s[1] == '-' ? 2 : 1);
            if (name == "json") {
                a.json_output = true;
                continue;
            }
            if (is_bare_flag(name)) {
                a.options.emplace_back(name, "1");
                continue;
            }
            if (i + 1 >= argv.size())
                throw UsageError("option --" + name + " needs a value");
            a.options.emplace_back(name, argv[++i]);
        } else {
            a.positional.push_back(s);
        }
    }
    return a;
}

json rat_json(const Rat& r) { return rat_to_json(num(r), den(r)); }

json chern_json(const ChernData& c) {
    return json{{"rank", c.rank}, {"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}};
}

json chow_json(const ChowClass& x) {
    json j = json::array();
    for (int d = 0; d < 4; ++d)
        j.push_back(rat_json(x[d]));
    return j;
}

json table_json(const CohomologyTable& t) {
    json j{{"h0", t.h0()}, {"h1", t.h1()}, {"h2", t.h2()}, {"h3", t.h3()}};
    j["provenance"] = t.provenance == Provenance::Mechanical ? "mechanical" : "cited-fact";
    if (!t.citation.empty())
        j["citation"] = t.citation;
    return j;
}

std::string chern_line(const ChernData& c) {
    std::ostringstream os;
    os << c << "   c(E) = " << total_chern(c).to_string();
    return os.str();
}

ChernData chern_from_args(const Args& a) {
    const long long r = parse_int(a.require("r"));
    if (r < 0)
        throw UsageError("rank must be non-negative");
    const auto cs = parse_int_list(a.require("c"), 3);
    return ChernData{r, cs[0], cs[1], cs[2]};
}

ChernData chern_from_4tuple(const std::string& s) {
    const auto v = parse_int_list(s, 4);
    if (v[0] < 0)
        throw UsageError("rank must be non-negative");
    return ChernData{v[0], v[1], v[2], v[3]};
}

CommandResult cmd_chern(const Args& a) {
    CommandResult res;
    res.command = "chern";
    if (a.positional.empty())
        throw UsageError("chern needs a subcommand: twist, dual, tensor or whitney");
    const std::string& sub = a.positional[0];
    std::ostringstream out;

    if (sub == "twist") {
        const ChernData c = chern_from_args(a);
        const long long k = parse_int(a.require("k"));
        const ChernData t = twist(c, k);
        res.inputs = {{"subcommand", sub}, {"chern", chern_json(c)}, {"k", k}};
        res.result = chern_json(t);
        out << chern_line(t) << '\n';
    } else if (sub == "dual") {
        const ChernData c = chern_from_args(a);
        const ChernData d = dual(c);
        res.inputs = {{"subcommand", sub}, {"chern", chern_json(c)}};
        res.result = chern_json(d);
        out << chern_line(d) << '\n';
    } else if (sub == "tensor") {
        const ChernData c = chern_from_args(a);
        const auto rs = a.require("R");
        const auto cs = parse_int_list(a.require("C"), 3);
        const ChernData b{parse_int(rs), cs[0], cs[1], cs[2]};
        const ChernData t = tensor(c, b);
        res.inputs = {{"subcommand", sub}, {"chern", chern_json(c)}, {"with", chern_json(b)}};
        res.result = chern_json(t);
        out << chern_line(t) << '\n';
    } else if (sub == "whitney") {
        const ChernData sub_c = chern_from_4tuple(a.require("sub"));
        ChernData result;
        if (auto amb = a.get("ambient-rank")) {
            result = whitney_quotient(sub_c, trivial(parse_int(*amb)));
            res.inputs = {{"subcommand", sub}, {"sub", chern_json(sub_c)},
                          {"ambient-rank", parse_int(*amb)}};
        } else if (auto tot = a.get("total")) {
            result = whitney_quotient(sub_c, chern_from_4tuple(*tot));
            res.inputs = {{"subcommand", sub}, {"sub", chern_json(sub_c)},
                          {"total", chern_json(chern_from_4tuple(*tot))}};
        } else if (auto quo = a.get("quot")) {
            result = whitney_sum(sub_c, chern_from_4tuple(*quo));
            res.inputs = {{"subcommand", sub}, {"sub", chern_json(sub_c)},
                          {"quot", chern_json(chern_from_4tuple(*quo))}};
        } else {
            throw UsageError("chern whitney needs --ambient-rank, --total or --quot");
        }
        res.result = chern_json(result);
        out << chern_line(result) << '\n';
    } else {
        throw UsageError("unknown chern subcommand '" + sub + "'");
    }
    res.text = out.str();
    return res;
}

CommandResult cmd_chi(const Args& a) {
    CommandResult res;
    res.command = "chi";
    const ChernData c = chern_from_args(a);
    const std::string method = a.get("method").value_or("both");
    res.inputs = {{"chern", chern_json(c)}, {"method", method}};
    std::ostringstream out;
    json r;
    if (method == "formula" || method == "both") {
        const Rat v = chi_formula(c);
        r["formula"] = rat_json(v);
        out << "chi (closed formula) = " << to_string(v) << '\n';
    }
    if (method == "hrr" || method == "both") {
        const Rat v = chi_hrr(c);
        r["hrr"] = rat_json(v);
        out << "chi (Riemann-Roch)  = " << to_string(v) << '\n';
    }
    if (method == "both" && chi_formula(c) != chi_hrr(c))
        throw std::logic_error("chi cross-path mismatch"); // unreachable
    if (method != "formula" && method != "hrr" && method != "both")
        throw UsageError("--method must be formula, hrr or both");
    if (!is_integer(chi_formula(c))) {
        res.status = Status::Flagged;
        res.citations.push_back(
            {"Section 2", "chi(E) = (2c1^3 - 3c1c2 + 3c3)/6 + 3(c1^2 - c2)/2 + 13c1/6 + r",
             "flagged"});
        out << "note: chi is not an integer; the data is not the Chern data of a sheaf on Q\n";
    }
    res.result = r;
    res.text = out.str();
    return res;
}

CommandResult cmd_coh(const Args& a) {
    CommandResult res;
    res.command = "coh";
    if (a.positional.empty())
        throw UsageError("coh needs a bundle name (line, spinor, A, Adual, phi, pair:<name>)");
    const std::string name = a.positional[0];
    const long long t = a.positional.size() > 1 ? parse_int(a.positional[1]) : 0;
    res.inputs = {{"bundle", name}, {"twist", t}};

    CohomologyTable tab;
    ChernData cd;
    if (name == "line") {
        tab = coh_line(t);
        cd = line(t);
    } else if (name == "spinor") {
        tab = coh_spinor(t);
        cd = twist(chern_of_atom(Atom::Spinor), t);
    } else if (name == "A") {
        tab = coh_A(t);
        cd = twist(chern_of_atom(Atom::PullbackA), t);
    } else if (name == "Adual") {
        tab = coh_A_dual(t);
        cd = twist(dual(chern_of_atom(Atom::PullbackA)), t);
    } else if (name == "phi") {
        tab = coh_phi(t);
        cd = twist(chern_of_atom(Atom::Phi), t);
    } else if (name == "phidual") {
        tab = coh_phi_dual(t);
        cd = twist(dual(chern_of_atom(Atom::Phi)), t);
    } else if (name.rfind("pair:", 0) == 0) {
        const auto key = pair_key_from_name(name.substr(5));
        if (!key) {
            std::ostringstream os;
            os << "unknown pair '" << name.substr(5) << "'; the catalogue holds:";
            for (const auto& n : pair_catalogue_names())
                os << ' ' << n;
            throw UnsupportedPair(os.str());
        }
        tab = coh_pair(*key, t);
        cd = pair_chern(*key, t);
    } else {
        throw UsageError("unknown bundle '" + name + "'");
    }

    res.result = {{"table", table_json(tab)}, {"chern", chern_json(cd)}};
    std::ostringstream out;
    out << "bundle " << name << " at twist " << t << ", Chern " << cd << "\n";
    for (int i = 0; i < 4; ++i) {
        out << "  h^" << i << " = " << tab.h[static_cast<size_t>(i)];
        if (i == 0 && tab.provenance == Provenance::CitedFact)
            out << "   [" << tab.citation << "]";
        out << '\n';
    }
    out << "  chi = " << tab.euler() << '\n';
    if (tab.provenance == Provenance::CitedFact) {
        res.status = Status::Flagged;
        res.citations.push_back({tab.citation, "", "cited"});
    }
    res.text = out.str();
    return res;
}

json entry_json(const ClassificationEntry& e) {
    json j{{"c1", e.c1},
           {"c2", e.c2},
           {"c3", e.c3},
           {"rank_min", e.rank_min},
           {"rank_max", e.rank_max},
           {"description", e.description},
           {"indecomposable", e.indecomposable},
           {"h0_E_minus1_nonzero", e.h0_E_minus1_nonzero}};
    if (e.curve)
        j["curve"] = e.curve->to_string();
    if (e.ambiguous)
        j["flagged"] = true;
    if (!e.note.empty())
        j["note"] = e.note;
    return j;
}

std::string entry_line(const ClassificationEntry& e) {
    std::ostringstream os;
    os << '(' << e.c1 << ',' << e.c2 << ',' << e.c3 << "; r = " << e.rank_min;
    if (e.rank_max != e.rank_min)
        os << ".." << e.rank_max;
    os << ")  " << (e.indecomposable ? "indecomposable" : "decomposable");
    if (e.curve)
        os << "  curve " << e.curve->to_string();
    os << "  " << e.description;
    if (e.ambiguous)
        os << "  [flagged: " << e.note << ']';
    else if (!e.note.empty())
        os << "  [" << e.note << ']';
    return os.str();
}

CommandResult cmd_classify(const Args& a) {
    CommandResult res;
    res.command = "classify";
    const long long c1 = parse_int(a.require("c1"));
    const bool rank3_only = a.has("rank3-only");
    const bool indec = a.has("indecomposable");
    res.inputs = {{"c1", c1}, {"rank3-only", rank3_only}, {"indecomposable", indec}};

    std::vector<ClassificationEntry> rows;
    if (c1 == 0) {
        ClassificationEntry e;
        e.description = "O^r (the unique globally generated bundle with c1 = 0)";
        e.rank_min = 1;
        e.rank_max = 0; // unbounded
        e.note = "Prop 2.1 consequence";
        rows.push_back(e);
    } else if (indec) {
        rows = theorem_table(c1);
    } else if (rank3_only) {
        rows = rank3_table(c1);
    } else {
        rows = higher_rank_table(c1);
    }

    json jrows = json::array();
    std::ostringstream out;
    for (const auto& e : rows) {
        jrows.push_back(entry_json(e));
        out << entry_line(e) << '\n';
        if (e.ambiguous) {
            res.status = Status::Flagged;
            res.citations.push_back({"Theorem 1.1 vs Theorem 1.2", e.note, "flagged"});
        }
    }
    res.result = {{"entries", jrows}};
    res.text = out.str();
    return res;
}

CommandResult cmd_delpezzo(const Args& a) {
    CommandResult res;
    res.command = "delpezzo";
    if (a.positional.size() < 2)
        throw UsageError("delpezzo needs degree and genus");
    const long long d = parse_int(a.positional[0]);
    const long long g = parse_int(a.positional[1]);
    if (d < 1 || g < 0)
        throw UsageError("need degree >= 1 and genus >= 0");
    DelPezzoFilter f = DelPezzoFilter::Positive;
    if (auto fs = a.get("filter")) {
        if (*fs == "raw") f = DelPezzoFilter::Raw;
        else if (*fs == "positive") f = DelPezzoFilter::Positive;
        else if (*fs == "standard") f = DelPezzoFilter::Standard;
        else throw UsageError("--filter must be raw, positive or standard");
    }
    res.inputs = {{"d", d}, {"g", g}};
    const auto classes = delpezzo_classes(d, g, f);
    json jc = json::array();
    std::ostringstream out;
    out << "classes (a; b1..b5) with " << d << " = 3a - sum(b), a^2 = " << (2 * g - 2 + d)
        << " + sum(b^2):\n";
    for (const auto& c : classes) {
        json j{{"a", c.a}, {"b", c.b}};
        jc.push_back(j);
        out << "  " << c.to_string() << '\n';
    }
    if (classes.empty())
        out << "  (none)\n";
    res.result = {{"classes", jc}};
    res.text = out.str();
    return res;
}

CommandResult cmd_trisecant(const Args& a) {
    CommandResult res;
    res.command = "trisecant";
    if (a.positional.size() < 2)
        throw UsageError("trisecant needs degree and genus");
    const long long d = parse_int(a.positional[0]);
    const long long g = parse_int(a.positional[1]);
    if (d < 1 || g < 0)
        throw UsageError("need degree >= 1 and genus >= 0");
    const long long t = trisecant(d, g);
    res.inputs = {{"d", d}, {"g", g}};
    res.result = {{"count", t}};
    std::ostringstream out;
    out << "t(" << d << ',' << g << ") = " << t << '\n';
    if (t < 0) {
        out << "note: negative count means infinitely many trisecant lines\n";
        res.status = Status::Flagged;
        res.citations.push_back(
            {"Remark 3.9", "if t(d,g) < 0 there are infinitely many trisecant lines", "flagged"});
        res.result["infinitely_many"] = true;
    }
    res.text = out.str();
    return res;
}

CommandResult cmd_verify(const Args& a) {
    CommandResult res;
    res.command = "verify-paper";
    const int section = a.get("section") ? static_cast<int>(parse_int(*a.get("section"))) : 0;
    res.inputs = {{"section", section}};
    const VerifyReport rep = run_verify(section);

    std::ostringstream out;
    json jchecks = json::array();
    for (const auto& c : rep.checks) {
        out << (c.status == CheckStatus::Pass      ? "  pass   "
                : c.status == CheckStatus::Flagged ? "  FLAG   "
                                                   : "  FAIL   ")
            << '[' << c.ref << "] " << c.identity;
        if (!c.detail.empty())
            out << "  -- " << c.detail;
        out << '\n';
        jchecks.push_back(json{{"ref", c.ref}, {"quote", c.identity},
                               {"status", c.status == CheckStatus::Pass      ? "pass"
                                          : c.status == CheckStatus::Flagged ? "flagged"
                                                                             : "fail"}});
        res.citations.push_back({c.ref, c.identity,
                                 c.status == CheckStatus::Pass      ? "pass"
                                 : c.status == CheckStatus::Flagged ? "flagged"
                                                                    : "fail"});
    }
    if (section == 0) {
        out << "cited facts used by the tables:\n";
        for (const auto& f : cited_facts()) {
            out << "  cited  [" << f.citation << "] " << f.statement << '\n';
            jchecks.push_back(json{{"ref", f.citation}, {"quote", f.statement}, {"status", "cited"}});
        }
    }
    out << rep.passed << " passed, " << rep.failed << " failed, " << rep.flagged << " flagged\n";
    res.result = {{"checks", jchecks},
                  {"passed", rep.passed},
                  {"failed", rep.failed},
                  {"flagged", rep.flagged}};
    if (rep.failed > 0)
        res.status = Status::Error;
    else if (rep.flagged > 0)
        res.status = Status::Flagged;
    res.text = out.str();
    return res;
}

const char* kUsage =
    "usage: quadricalc <command> [options] [--json]\n"
    "\n"
    "commands:\n"
    "  chern twist   -r <rank> -c <c1,c2,c3> -k <k>        Chern data of E(k)\n"
    "  chern dual    -r <rank> -c <c1,c2,c3>               Chern data of E^v\n"
    "  chern tensor  -r <rank> -c <c1,c2,c3> -R <rank2> -C <c1,c2,c3>\n"
    "  chern whitney --sub <r,c1,c2,c3> (--ambient-rank <n> | --total <r,c1,c2,c3> | --quot <r,c1,c2,c3>)\n"
    "  chi           -r <rank> -c <c1,c2,c3> [--method formula|hrr|both]\n"
    "  coh           <line|spinor|A|Adual|phi|phidual|pair:<name>> [t]\n"
    "  classify      --c1 <0|1|2> [--rank3-only] [--indecomposable]\n"
    "  delpezzo      <d> <g> [--filter raw|positive|standard]\n"
    "  trisecant     <d> <g>\n"
    "  verify-paper  [--section <1..5>]\n";

} // namespace

json rat_to_json(long long n, long long d) { return json{{"num", n}, {"den", d}}; }

json CommandResult::to_json() const {
    json j{{"command", command}, {"inputs", inputs}, {"result", result}};
    json cits = json::array();
    for (const auto& c : citations)
        cits.push_back(json{{"ref", c.ref}, {"quote", c.quote}, {"status", c.status}});
    j["citations"] = cits;
    j["status"] = status == Status::Ok ? "ok" : status == Status::Flagged ? "flagged" : "error";
    return j;
}

CommandResult dispatch(const std::vector<std::string>& argv) {
    if (argv.empty())
        throw UsageError("no command given");
    const std::string& cmd = argv[0];
    const Args a = parse_args(argv, 1);
    if (cmd == "chern") return cmd_chern(a);
    if (cmd == "chi") return cmd_chi(a);
    if (cmd == "coh") return cmd_coh(a);
    if (cmd == "classify") return cmd_classify(a);
    if (cmd == "delpezzo") return cmd_delpezzo(a);
    if (cmd == "trisecant") return cmd_trisecant(a);
    if (cmd == "verify-paper") return cmd_verify(a);
    throw UsageError("unknown command '" + cmd + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
        out << kUsage;
        return args.empty() ? 2 : 0;
    }
    bool want_json = std::any_of(args.begin(), args.end(),
                                 [](const std::string& s) { return s == "--json"; });
    try {
        const CommandResult res = dispatch(args);
        if (want_json)
            out << res.to_json().dump(2) << '\n';
        else
            out << res.text;
        if (res.status == Status::Error)
            return 1;
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n' << kUsage;
        return 2;
    } catch (const UnsupportedPair& e) {
        err << "unsupported: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace quadric::cli
