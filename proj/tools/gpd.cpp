// gpd: command-line front end over the C interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpd/gpd.h"

namespace
{

enum Exit
{
    kPass = 0,
    kIo = 1,
    kValidation = 2,
    kCheckFailed = 3,
    kInternal = 4,
};

struct Owned
{
    char* text = nullptr;
    ~Owned() { gpd_string_free(text); }
};

int exit_code(gpd_status s)
{
    switch (s)
    {
    case GPD_OK: return kPass;
    case GPD_ERR_IO: return kIo;
    case GPD_ERR_VALIDATION: return kValidation;
    case GPD_CHECK_FAILED: return kCheckFailed;
    case GPD_ERR_ARGUMENT: return kValidation;
    case GPD_ERR_INTERNAL: return kInternal;
    }
    return kInternal;
}

int report_error(gpd_status s)
{
    std::cerr << "gpd: " << gpd_last_error() << "\n";
    return exit_code(s);
}

// Writes to `out`, or stdout when empty.
int write_output(std::string const& out, char const* text)
{
    if (out.empty())
    {
        std::fputs(text, stdout);
        return kPass;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f || !(f << text))
    {
        std::cerr << "gpd: Io: cannot write " << out << "\n";
        return kIo;
    }
    return kPass;
}

template <typename T, void (*Free)(T*)>
using Handle = std::unique_ptr<T, decltype([](T* p) { Free(p); })>;

using PosetHandle = Handle<gpd_poset, gpd_poset_free>;
using ComplexHandle = Handle<gpd_complex, gpd_complex_free>;
using FiltrationHandle = Handle<gpd_filtration, gpd_filtration_free>;
using ModuleHandle = Handle<gpd_module, gpd_module_free>;

struct DiagramArgs
{
    std::string input;
    int degree = -1;
    bool all = false;
    unsigned field = 2;
    std::string out;
};

int run_diagram(DiagramArgs const& a)
{
    gpd_kind kind;
    if (gpd_status s = gpd_detect(a.input.c_str(), &kind); s != GPD_OK)
        return report_error(s);
    Owned text;
    if (kind == GPD_KIND_MODULE || kind == GPD_KIND_PRESENTATION)
    {
        gpd_module* raw = nullptr;
        if (gpd_status s = gpd_module_load(a.input.c_str(), &raw); s != GPD_OK)
            return report_error(s);
        ModuleHandle m(raw);
        if (gpd_status s = gpd_module_diagram(m.get(), &text.text); s != GPD_OK)
            return report_error(s);
        return write_output(a.out, text.text);
    }
    if (kind != GPD_KIND_FILTRATION && kind != GPD_KIND_COFILTRATION)
    {
        std::cerr << "gpd: Parse: " << a.input << " is not a filtration, cofiltration, module or presentation\n";
        return kValidation;
    }
    if (!a.all && a.degree < 0)
    {
        std::cerr << "gpd: give --degree d or --all\n";
        return kValidation;
    }
    gpd_filtration* raw = nullptr;
    if (gpd_status s = gpd_filtration_load(a.input.c_str(), &raw); s != GPD_OK)
        return report_error(s);
    FiltrationHandle f(raw);
    int const degree = a.all ? -1 : a.degree;
    if (gpd_status s = gpd_filtration_diagram(f.get(), degree, a.field, &text.text); s != GPD_OK)
        return report_error(s);
    return write_output(a.out, text.text);
}

int run_dualize(std::string const& input, std::string const& out)
{
    gpd_filtration* raw = nullptr;
    if (gpd_status s = gpd_filtration_load(input.c_str(), &raw); s != GPD_OK)
        return report_error(s);
    FiltrationHandle f(raw);
    gpd_filtration* dual_raw = nullptr;
    if (gpd_status s = gpd_filtration_dualize(f.get(), &dual_raw); s != GPD_OK)
        return report_error(s);
    FiltrationHandle dual(dual_raw);
    Owned text;
    if (gpd_status s = gpd_filtration_to_json(dual.get(), &text.text); s != GPD_OK)
        return report_error(s);
    return write_output(out, text.text);
}

int run_hasse(std::string const& input, bool interval, bool dot, std::string const& out)
{
    gpd_poset* raw = nullptr;
    if (gpd_status s = gpd_poset_load(input.c_str(), &raw); s != GPD_OK)
        return report_error(s);
    PosetHandle p(raw);
    Owned text;
    if (gpd_status s = gpd_poset_hasse(p.get(), interval, dot, &text.text); s != GPD_OK)
        return report_error(s);
    return write_output(out, text.text);
}

int run_subdivide(std::string const& input, std::string const& out)
{
    gpd_complex* raw = nullptr;
    if (gpd_status s = gpd_complex_load(input.c_str(), &raw); s != GPD_OK)
        return report_error(s);
    ComplexHandle k(raw);
    gpd_complex* sd_raw = nullptr;
    if (gpd_status s = gpd_complex_subdivide(k.get(), &sd_raw); s != GPD_OK)
        return report_error(s);
    ComplexHandle sd(sd_raw);
    Owned text;
    if (gpd_status s = gpd_complex_to_json(sd.get(), &text.text); s != GPD_OK)
        return report_error(s);
    return write_output(out, text.text);
}

struct CheckArgs
{
    std::string what;
    std::vector<std::string> inputs;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    unsigned field = 2;
    bool advisory = false;
    std::string out;
};

std::string reproduction(CheckArgs const& a)
{
    std::string cmd = "gpd check " + a.what;
    for (auto const& i : a.inputs)
        cmd += " " + i;
    if (a.inputs.empty() || a.what == "duality")
        cmd += " --trials " + std::to_string(a.trials) + " --seed " + std::to_string(a.seed);
    cmd += " --field " + std::to_string(a.field);
    if (a.advisory)
        cmd += " --advisory";
    return cmd;
}

gpd_status check_with_inputs(CheckArgs const& a, Owned& report, bool& seeded)
{
    seeded = false;
    std::string const& first = a.inputs[0];
    gpd_kind kind;
    if (gpd_status s = gpd_detect(first.c_str(), &kind); s != GPD_OK)
        return s;
    bool const filtration = kind == GPD_KIND_FILTRATION || kind == GPD_KIND_COFILTRATION;
    bool const module = kind == GPD_KIND_MODULE || kind == GPD_KIND_PRESENTATION;

    if (a.what == "duality" && kind == GPD_KIND_COMPLEX)
    {
        seeded = true;
        gpd_complex* raw = nullptr;
        if (gpd_status s = gpd_complex_load(first.c_str(), &raw); s != GPD_OK)
            return s;
        ComplexHandle k(raw);
        return gpd_check_duality_suite(k.get(), a.trials, a.seed, a.field, &report.text);
    }
    if (filtration && (a.what == "duality" || a.what == "equivalence" || a.what == "functoriality"))
    {
        gpd_filtration* raw = nullptr;
        if (gpd_status s = gpd_filtration_load(first.c_str(), &raw); s != GPD_OK)
            return s;
        FiltrationHandle f(raw);
        if (a.what == "duality")
            return gpd_filtration_check_duality(f.get(), a.field, a.advisory, &report.text);
        if (a.what == "equivalence")
            return gpd_filtration_check_equivalence(f.get(), a.field, &report.text);
        if (a.inputs.size() < 2)
        {
            std::cerr << "gpd: check functoriality needs a filtration and a connection file\n";
            return GPD_ERR_ARGUMENT;
        }
        return gpd_filtration_check_functoriality(f.get(), a.inputs[1].c_str(), a.field, &report.text);
    }
    if (module && a.what == "module-equivalence")
    {
        if (a.inputs.size() < 2)
        {
            std::cerr << "gpd: check module-equivalence needs a module and a connection file\n";
            return GPD_ERR_ARGUMENT;
        }
        gpd_module* raw = nullptr;
        if (gpd_status s = gpd_module_load(first.c_str(), &raw); s != GPD_OK)
            return s;
        ModuleHandle m(raw);
        return gpd_module_check_equivalence(m.get(), a.inputs[1].c_str(), &report.text);
    }
    std::cerr << "gpd: check " << a.what << " does not take " << first << " as input\n";
    return GPD_ERR_ARGUMENT;
}

int run_check(CheckArgs const& a)
{
    Owned report;
    bool seeded = true;
    gpd_status s;
    if (a.inputs.empty())
    {
        std::string const suite = a.what == "module-equivalence" ? "module-equivalence" : a.what;
        s = gpd_check_suite(suite.c_str(), a.trials, a.seed, a.field, &report.text);
    }
    else
        s = check_with_inputs(a, report, seeded);

    if (s != GPD_OK && s != GPD_CHECK_FAILED)
    {
        if (s == GPD_ERR_ARGUMENT && *gpd_last_error() == '\0')
            return kValidation;
        return report_error(s);
    }
    if (seeded)
        std::cerr << "seed " << a.seed << "\n";
    if (int rc = write_output(a.out, report.text); rc != kPass)
        return rc;
    if (s == GPD_CHECK_FAILED)
    {
        std::cerr << "gpd: check " << a.what << " failed; reproduce with: " << reproduction(a) << "\n";
        return kCheckFailed;
    }
    return kPass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalized persistence diagrams over finite posets"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", gpd_version());

    int rc = kPass;

    DiagramArgs diag;
    auto* diagram = app.add_subcommand("diagram", "Persistence diagram of a (co)filtration, module or presentation");
    diagram->add_option("input", diag.input, "JSON input file")->required();
    auto* degree_opt = diagram->add_option("--degree", diag.degree, "Homological degree");
    auto* all_opt = diagram->add_flag("--all", diag.all, "Every degree 0..dim K");
    degree_opt->excludes(all_opt);
    diagram->add_option("--field", diag.field, "Prime characteristic")->capture_default_str();
    diagram->add_option("--out", diag.out, "Output file (default stdout)");
    diagram->callback([&] { rc = run_diagram(diag); });

    std::string dual_in, dual_out;
    auto* dualize = app.add_subcommand("dualize", "Dual (co)filtration over the barycentric subdivision");
    dualize->add_option("input", dual_in, "Filtration or cofiltration file")->required();
    dualize->add_option("--out", dual_out, "Output file (default stdout)");
    dualize->callback([&] { rc = run_dualize(dual_in, dual_out); });

    CheckArgs chk;
    auto* check = app.add_subcommand("check", "Verify an identity on inputs or on seeded random instances");
    check->add_option("what", chk.what, "Which check")
        ->required()
        ->check(CLI::IsMember({"rota", "mobius", "functoriality", "equivalence", "duality", "module-equivalence",
                               "presentation"}));
    check->add_option("inputs", chk.inputs, "Input files");
    check->add_option("--trials", chk.trials, "Random trials")->capture_default_str();
    check->add_option("--seed", chk.seed, "Random seed")->capture_default_str();
    check->add_option("--field", chk.field, "Prime characteristic")->capture_default_str();
    check->add_flag("--advisory", chk.advisory, "Report manifold hypotheses instead of requiring them");
    check->add_option("--out", chk.out, "Report file (default stdout)");
    check->callback([&] { rc = run_check(chk); });

    std::string hasse_in, hasse_out;
    bool interval = false, dot = false;
    auto* hasse = app.add_subcommand("hasse", "Hasse diagram of a poset or of its interval poset");
    hasse->add_option("input", hasse_in, "Poset file")->required();
    hasse->add_flag("--interval", interval, "Use Int P");
    hasse->add_flag("--dot", dot, "Emit Graphviz dot instead of JSON");
    hasse->add_option("--out", hasse_out, "Output file (default stdout)");
    hasse->callback([&] { rc = run_hasse(hasse_in, interval, dot, hasse_out); });

    std::string sd_in, sd_out;
    auto* subdivide = app.add_subcommand("subdivide", "Barycentric subdivision of a complex");
    subdivide->add_option("input", sd_in, "Complex file")->required();
    subdivide->add_option("--out", sd_out, "Output file (default stdout)");
    subdivide->callback([&] { rc = run_subdivide(sd_in, sd_out); });

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e);
        return code == 0 ? kPass : kValidation;
    }
    return rc;
}
