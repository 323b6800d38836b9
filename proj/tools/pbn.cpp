// pbn: command-line front end for the Prym-Brill-Noether numerics.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <pbn/commands.hpp>

namespace {

template <class T>
std::optional<T> optional_of(CLI::Option* opt, const T& value)
{
    return opt->count() ? std::optional<T>(value) : std::nullopt;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"pbn - Prym-Brill-Noether dimensions, classes, point counts and limit vanishing orders"};
    app.require_subcommand(1);

    std::string format_name = "json";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "csv", "md"}))
        ->capture_default_str();

    // dim
    auto* dim = app.add_subcommand("dim", "Expected dimension and emptiness of a locus");
    std::string dim_locus;
    int dim_g = 0, dim_k = 0, dim_r = 0, dim_d = 0;
    std::string dim_a;
    dim->add_option("--locus", dim_locus, "V | V_eta | V_eta_pointed | V_div | V_eta_div")->required();
    auto* dim_g_opt = dim->add_option("--g", dim_g, "Genus of the base curve");
    auto* dim_k_opt = dim->add_option("--k", dim_k, "Half the number of branch points");
    auto* dim_r_opt = dim->add_option("--r", dim_r, "Rank");
    auto* dim_d_opt = dim->add_option("--d", dim_d, "Degree of the twisting divisor");
    auto* dim_a_opt = dim->add_option("--a", dim_a, "Vanishing sequence, comma separated");

    // class
    auto* cls = app.add_subcommand("class", "Cohomology class of a locus");
    std::string cls_locus, cls_a;
    int cls_r = 0, cls_g = 0, cls_k = 0;
    bool cls_engine = false;
    cls->add_option("--locus", cls_locus, "V_unramified | V_eta | V_eta_pointed")->required();
    auto* cls_r_opt = cls->add_option("--r", cls_r, "Rank");
    auto* cls_a_opt = cls->add_option("--a", cls_a, "Vanishing sequence, comma separated");
    auto* cls_g_opt = cls->add_option("--g", cls_g, "Genus; adds the space and the degree when dimensions match");
    auto* cls_k_opt = cls->add_option("--k", cls_k, "Half the number of branch points (twisted loci, default 1)");
    cls->add_flag("--engine", cls_engine, "Also evaluate the Q~ Pfaffian engine");

    // count
    auto* cnt = app.add_subcommand("count", "Number of points of a zero-dimensional twisted locus");
    int cnt_g = 0, cnt_k = 0, cnt_r = 0;
    cnt->add_option("--g", cnt_g, "Genus")->required();
    cnt->add_option("--k", cnt_k, "Half the number of branch points (1 or 2)")->required();
    cnt->add_option("--r", cnt_r, "Rank")->required();

    // limits
    auto* lim = app.add_subcommand("limits", "Vanishing orders of Prym limit linear series");
    std::string lim_flavor;
    int lim_g = 0, lim_r = 0;
    bool lim_show = false;
    lim->add_option("--flavor", lim_flavor, "unramified | ramified | dual")->required();
    lim->add_option("--g", lim_g, "Genus")->required();
    lim->add_option("--r", lim_r, "Rank")->required();
    lim->add_flag("--show-candidates", lim_show, "Also list every candidate before the endpoint filter");

    // verify
    auto* ver = app.add_subcommand("verify", "Run the cross-module identity suites");
    pbn::VerifyBounds bounds;
    ver->add_option("--max-weight", bounds.max_weight, "Largest class exponent checked")->capture_default_str();
    ver->add_option("--max-g", bounds.max_g, "Largest genus for the limit and W suites")->capture_default_str();
    ver->add_option("--max-r", bounds.max_r, "Largest rank")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? pbn::exit_ok : pbn::exit_usage;
    }

    try {
        pbn::OutputRecord rec;
        if (*dim) {
            rec = pbn::cmd_dim({dim_locus, optional_of(dim_g_opt, dim_g), optional_of(dim_k_opt, dim_k),
                                optional_of(dim_r_opt, dim_r), optional_of(dim_d_opt, dim_d),
                                optional_of(dim_a_opt, dim_a)});
        } else if (*cls) {
            rec = pbn::cmd_class({cls_locus, optional_of(cls_r_opt, cls_r), optional_of(cls_a_opt, cls_a),
                                  optional_of(cls_g_opt, cls_g), optional_of(cls_k_opt, cls_k), cls_engine});
        } else if (*cnt) {
            rec = pbn::cmd_count(cnt_g, cnt_k, cnt_r);
        } else if (*lim) {
            rec = pbn::cmd_limits(lim_flavor, lim_g, lim_r, lim_show);
        } else {
            rec = pbn::cmd_verify(bounds);
            if (rec.exit_code != pbn::exit_ok)
                std::cerr << "verify failed: " << rec.result["first_counterexample"].get<std::string>() << "\n";
        }
        std::cout << pbn::serialize(rec, pbn::parse_format(format_name));
        return rec.exit_code;
    } catch (const pbn::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return pbn::exit_invariant;
    } catch (const pbn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return pbn::exit_usage;
    }
}
