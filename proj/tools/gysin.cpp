// gysin: equivariant push-forwards to a point from the command line.
//
//   gysin pushforward --space lg:2 --class "s[3,1](z)" --oracle
//   gysin pushforward --table pr:2,6 --format json

#include <gysin/cli.hpp>
#include <gysin/errors.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <iterator>

int main(int argc, char **argv)
{
    CLI::App app{"Equivariant push-forwards to a point via iterated residues"};
    app.require_subcommand(1);
    auto *push = app.add_subcommand("pushforward", "integrate a class over a homogeneous space");

    std::string space;
    std::string class_expr;
    std::string table;
    std::string format = "text";
    bool oracle = false;
    bool unsimplified = false;
    push->add_option("--space", space, "gr:k,n | lg:n | og:n,2n | og:n,2n+1 | flA|flC|flB|flD:d1,...,dk;n");
    push->add_option("--class", class_expr, "class polynomial, or - to read it from stdin");
    push->add_flag("--oracle", oracle, "cross-check against fixed-point localization");
    push->add_flag("--unsimplified", unsimplified, "type A flags: residue over every block");
    push->add_option("--table", table, "batch mode, pr:n,maxweight");
    push->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    const auto fmt = format == "json" ? gysin::OutputFormat::Json : gysin::OutputFormat::Text;
    try {
        if (!table.empty()) {
            const auto [n, max_weight] = gysin::parse_table_spec(table);
            std::cout << gysin::render_table(gysin::lagrangian_schur_table(n, max_weight, gysin::thread_budget()), fmt);
            return 0;
        }
        if (space.empty() || class_expr.empty()) {
            std::cerr << "error: --space and --class are required unless --table is given\n";
            return 1;
        }
        if (class_expr == "-") {
            class_expr.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
            while (!class_expr.empty() && (class_expr.back() == '\n' || class_expr.back() == '\r'))
                class_expr.pop_back();
        }
        gysin::Request request;
        request.space = gysin::parse_space(space);
        request.class_expr = class_expr;
        request.check_oracle = oracle;
        request.unsimplified = unsimplified;
        request.output_format = fmt;
        const gysin::Report report = gysin::run(request);
        std::cout << report.render(fmt);
        if (report.exit_code() == 2)
            std::cerr << "error: residue result and fixed-point localization disagree\n";
        return report.exit_code();
    } catch (const gysin::NotWeylSymmetric &e) {
        std::cerr << "error: " << e.what() << "\n  the class must be symmetric in the variables of each z block\n";
    } catch (const gysin::NotNormalCrossing &e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const gysin::ParseError &e) {
        std::cerr << "error: cannot parse class: " << e.what() << "\n";
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 1;
}
