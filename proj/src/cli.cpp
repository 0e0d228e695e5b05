#include "charclass/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "charclass/manifolds.hpp"
#include "charclass/mult_seq.hpp"
#include "charclass/surgery.hpp"

namespace charclass::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, json };

struct SeriesOptions {
    std::string series = "L";
    int weight = 3;
};

struct ParamOptions {
    int n = 2;
    std::string A = "0";
    std::string B = "0";
    std::string C = "0";
    std::string lambda = "1";
};

const std::vector<std::string> manifold_reports = {"pontryagin", "l-class", "ahat-class", "signature", "ahat"};

Series series_by_name(const std::string& name, int weight) {
    const auto order = static_cast<std::size_t>(weight);
    return name == "L" ? l_genus_series(order) : ahat_genus_series(order);
}

NormalInvariantParams to_params(const ParamOptions& o) {
    NormalInvariantParams p;
    p.n = o.n;
    p.A = Rational::parse(o.A);
    p.B = Rational::parse(o.B);
    p.C = Rational::parse(o.C);
    p.lambda = Rational::parse(o.lambda);
    p.validate();
    return p;
}

Json params_json(const NormalInvariantParams& p) {
    return Json{{"A", p.A.to_string()}, {"B", p.B.to_string()}, {"C", p.C.to_string()}, {"lambda", p.lambda.to_string()}};
}

std::string vector_text(const ParamVector& v) {
    return "[" + v[0].to_string() + ", " + v[1].to_string() + ", " + v[2].to_string() + "]";
}

Json solution_json(const BundleSolution& s) {
    Json j;
    j["n"] = s.params.n;
    j["params"] = params_json(s.params);
    j["sigma"] = s.sigma.to_string();
    j["a_hat"] = s.a_hat.to_string();
    j["p1_cubed"] = s.p1_cubed ? Json(s.p1_cubed->to_string()) : Json(nullptr);
    Json basis = Json::array();
    for (const auto& v : s.kernel_basis) basis.push_back({v[0].to_string(), v[1].to_string(), v[2].to_string()});
    j["kernel_basis"] = basis;
    return j;
}

void params_text(std::ostream& out, const NormalInvariantParams& p) {
    out << "n: " << p.n << "\n";
    out << "params: A=" << p.A << " B=" << p.B << " C=" << p.C << " lambda=" << p.lambda << "\n";
}

void solution_text(std::ostream& out, const BundleSolution& s) {
    out << "sigma: " << s.sigma << "\n";
    out << "a_hat: " << s.a_hat << "\n";
    if (s.p1_cubed) out << "p1_cubed: " << *s.p1_cubed << "\n";
    out << "kernel_basis:";
    for (std::size_t i = 0; i < s.kernel_basis.size(); ++i) out << (i == 0 ? " " : ", ") << vector_text(s.kernel_basis[i]);
    out << "\n";
    out << "admissible: " << (s.admissible ? "yes" : "no") << "\n";
    out << "nontrivial: " << (s.nontrivial ? "yes" : "no") << "\n";
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void run_coeff(const SeriesOptions& o, Format format, std::ostream& out) {
    const Series q = series_by_name(o.series, o.weight);
    if (format == Format::json) {
        Json coeffs = Json::array();
        for (const auto& c : q.coefficients()) coeffs.push_back(c.to_string());
        emit(out, Json{{"series", o.series}, {"order", o.weight}, {"coefficients", coeffs}});
        return;
    }
    out << "series: " << o.series << "\n";
    out << "Q(z) = " << q.to_string() << "\n";
    for (std::size_t k = 0; k <= q.order(); ++k) out << "c" << k << " = " << q[k] << "\n";
}

void run_genus(const SeriesOptions& o, Format format, std::ostream& out) {
    const GenusTable table(series_by_name(o.series, o.weight), o.weight);
    if (format == Format::json) {
        Json polys = Json::array();
        for (const auto& k : table.polys()) {
            Json terms = Json::object();
            for (const auto& [partition, c] : k.terms()) terms[PartitionPoly::monomial(partition).to_string()] = c.to_string();
            polys.push_back(terms);
        }
        emit(out, Json{{"series", o.series}, {"weight", o.weight}, {"K", polys}});
        return;
    }
    for (int i = 1; i <= table.max_weight(); ++i) out << "K" << i << " = " << table.K(i).to_fraction_string() << "\n";
}

void run_manifold(const std::string& descriptor, const std::vector<std::string>& reports, Format format,
                  std::ostream& out) {
    const ManifoldModel m = parse_descriptor(descriptor);
    const std::vector<std::string>& wanted = reports.empty() ? manifold_reports : reports;
    auto value = [&m](const std::string& report) -> std::string {
        if (report == "pontryagin") return m.tangent_pontryagin.to_string();
        if (report == "l-class") return l_class(m).to_string();
        if (report == "ahat-class") return ahat_class(m).to_string();
        if (report == "signature") return signature(m).to_string();
        return a_hat_genus(m).to_string();
    };
    if (format == Format::json) {
        Json j{{"manifold", m.name}, {"dimension", m.dimension}};
        for (const auto& r : wanted) j[r] = value(r);
        emit(out, j);
        return;
    }
    out << "manifold: " << m.name << "\n";
    out << "dimension: " << m.dimension << "\n";
    for (const auto& r : wanted) out << r << ": " << value(r) << "\n";
}

void run_pontryagin(const NormalInvariantParams& p, Format format, std::ostream& out) {
    const RingElement total = xi_total_class_via_character(p);
    const auto ph = pont_character(total, p.n + 1);
    std::vector<std::string> ph_text, p_text;
    for (int i = 1; i <= p.n + 1; ++i) {
        ph_text.push_back(ph[static_cast<std::size_t>(i - 1)].to_string());
        p_text.push_back(homogeneous_part(total, 4 * i).to_string());
    }
    if (format == Format::json) {
        emit(out, Json{{"n", p.n}, {"params", params_json(p)}, {"ph", ph_text}, {"pontryagin", p_text},
                       {"total", total.to_string()}});
        return;
    }
    out << "n: " << p.n << "\n";
    for (std::size_t i = 0; i < ph_text.size(); ++i) out << "ph" << i + 1 << ": " << ph_text[i] << "\n";
    for (std::size_t i = 0; i < p_text.size(); ++i) out << "p" << i + 1 << ": " << p_text[i] << "\n";
    out << "p: " << total.to_string() << "\n";
}

void run_surgery(const NormalInvariantParams& p, Format format, std::ostream& out) {
    const BundleSolution s = evaluate_bundle(p);
    if (format == Format::json) {
        emit(out, solution_json(s));
        return;
    }
    const RingElement xi = xi_total_class(p);
    const int weight = p.n + 1;
    params_text(out, p);
    out << "p(xi): " << xi.to_string() << "\n";
    out << "L(-xi): " << inverse(evaluate_genus(*l_genus_table(weight), xi)).to_string() << "\n";
    out << "Ahat(-xi): " << inverse(evaluate_genus(*ahat_genus_table(weight), xi)).to_string() << "\n";
    out << "signature(M'): " << glued_signature(p) << "\n";
    solution_text(out, s);
}

void run_solve(int n, bool require_section, Format format, std::ostream& out) {
    const BundleSolution s = solve_bundle(n, require_section);
    if (format == Format::json) {
        emit(out, solution_json(s));
        return;
    }
    params_text(out, s.params);
    solution_text(out, s);
}

std::string one_line(std::string message) {
    std::replace(message.begin(), message.end(), '\n', ' ');
    while (!message.empty() && message.back() == ' ') message.pop_back();
    return message;
}

void add_param_options(CLI::App* cmd, ParamOptions& o) {
    cmd->add_option("--n", o.n, "Quaternionic projective dimension of the fibre")->check(CLI::Range(2, 64));
    cmd->add_option("--A", o.A, "Parameter A as num/den");
    cmd->add_option("--B", o.B, "Parameter B as num/den (n = 2 only)");
    cmd->add_option("--C", o.C, "Parameter C as num/den");
    cmd->add_option("--lambda", o.lambda, "Nonzero scale lambda as num/den");
}

void add_series_options(CLI::App* cmd, SeriesOptions& o) {
    cmd->add_option("--series", o.series, "Characteristic series: L or ahat")->check(CLI::IsMember({"L", "ahat"}));
    cmd->add_option("--weight", o.weight, "Truncation order / maximal weight")->check(CLI::Range(0, 40));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact characteristic-class calculator", "charclass"};
    app.require_subcommand(1);

    std::string format_name = "text";
    auto add_format = [&format_name](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "Output format: text or json")->check(CLI::IsMember({"text", "json"}));
    };

    SeriesOptions coeff_opts;
    auto* coeff = app.add_subcommand("coeff", "Coefficients of a genus series");
    add_series_options(coeff, coeff_opts);
    add_format(coeff);

    SeriesOptions genus_opts;
    auto* genus = app.add_subcommand("genus", "Polynomials K_1..K_N of a multiplicative sequence");
    add_series_options(genus, genus_opts);
    add_format(genus);

    std::string descriptor;
    std::vector<std::string> reports;
    auto* manifold = app.add_subcommand("manifold", "Characteristic classes of a catalog manifold");
    manifold->add_option("--descriptor", descriptor, "hp:<n>, s:<k>, point or product:<d1>,<d2>")->required();
    manifold->add_option("--report", reports, "Comma-separated: pontryagin,l-class,ahat-class,signature,ahat")
        ->delimiter(',')
        ->check(CLI::IsMember(manifold_reports));
    add_format(manifold);

    ParamOptions pont_opts;
    auto* pontryagin = app.add_subcommand("pontryagin", "Pontryagin classes of xi from its character");
    add_param_options(pontryagin, pont_opts);
    add_format(pontryagin);

    ParamOptions surgery_opts;
    auto* surgery = app.add_subcommand("surgery", "Surgery obstruction and characteristic numbers");
    add_param_options(surgery, surgery_opts);
    add_format(surgery);

    int solve_n = 2;
    bool require_section = false;
    auto* solve = app.add_subcommand("solve-bundle", "Parameters with vanishing obstruction and nonzero A-hat");
    solve->add_option("--n", solve_n, "Even quaternionic projective dimension")->check(CLI::Range(2, 64));
    solve->add_flag("--require-section", require_section, "Also require A = 0 (n = 2)");
    add_format(solve);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return 2;
    }

    const Format format = format_name == "json" ? Format::json : Format::text;
    try {
        // Buffered: a failing command writes nothing to out.
        std::ostringstream buffer;
        if (coeff->parsed()) {
            run_coeff(coeff_opts, format, buffer);
        } else if (genus->parsed()) {
            run_genus(genus_opts, format, buffer);
        } else if (manifold->parsed()) {
            run_manifold(descriptor, reports, format, buffer);
        } else if (pontryagin->parsed()) {
            run_pontryagin(to_params(pont_opts), format, buffer);
        } else if (surgery->parsed()) {
            run_surgery(to_params(surgery_opts), format, buffer);
        } else if (solve->parsed()) {
            run_solve(solve_n, require_section, format, buffer);
        }
        out << buffer.str();
    } catch (const std::exception& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return 1;
    }
    return 0;
}

}  // namespace charclass::cli
