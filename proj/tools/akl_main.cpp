// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "akl/cli_ops.hpp"

int main(int argc, char** argv) {
    CLI::App app{"akl: classify locally homogeneous affine connections on 2D charts"};
    app.require_subcommand(1);

    std::string connection_path, point, params, g1, g2, velocity, filter, inject, action;
    int max_order = 6;
    int steps = 100;
    double total_time = 1.0;

    CLI::App* classify = app.add_subcommand(
        "classify", "Solve the Killing equations at a point and name the case");
    classify->add_option("--connection", connection_path, "JSON connection spec file")
        ->required();
    classify->add_option("--point", point,
                         "base point x0,y0 (rationals; defaults to the file's base_point)");
    classify->add_option("--max-order", max_order, "prolongation order cap")
        ->capture_default_str();

    CLI::App* family =
        app.add_subcommand("family", "Inspect a member of the four-parameter family");
    family->add_option("--params", params, "alpha,beta,gamma,upsilon[,delta] (rationals)")
        ->required();

    CLI::App* holonomy = app.add_subcommand(
        "holonomy", "Case analysis for a pair of commuting holonomy generators");
    holonomy->add_option("--params", params, "alpha,beta,gamma,upsilon[,delta] (rationals)")
        ->required();
    holonomy->add_option("--g1", g1, "first generator s,t,u,v")->required();
    holonomy->add_option("--g2", g2, "second generator s,t,u,v")->required();

    CLI::App* group = app.add_subcommand(
        "group", "Products, inverses and commutation in the isometry group");
    group->add_option("--params", params, "alpha,beta,gamma,upsilon[,delta] (rationals)")
        ->required();
    group->add_option("--g1", g1, "first element s,t,u,v")->required();
    group->add_option("--g2", g2, "second element s,t,u,v")->required();
    group->add_option("--point", point, "chart point x,y to push through g1");

    CLI::App* models = app.add_subcommand("models", "Homogeneous-space model checks");
    models->add_option("action", action, "what to run ('verify')")->required();

    CLI::App* geodesic =
        app.add_subcommand("geodesic", "Integrate a geodesic and emit CSV");
    geodesic->add_option("--connection", connection_path, "JSON connection spec file")
        ->required();
    geodesic->add_option("--point", point,
                         "start point x,y (defaults to the file's base_point)");
    geodesic->add_option("--velocity", velocity, "initial velocity vx,vy")->required();
    geodesic->add_option("--time", total_time, "total integration time")
        ->capture_default_str();
    geodesic->add_option("--steps", steps, "number of integration steps")
        ->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "Run the certificate suite");
    verify->add_option("filter", filter, "substring filter on certificate names");
    verify->add_option("--inject", inject,
                       "deliberate fault: psi-sign-flip or case6-target");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        std::cerr << "error: " << e.what() << "\n";
        return akl::kExitParse;
    }

    akl::CommandResult res;
    if (*classify)
        res = akl::cmd_classify(connection_path, point, max_order);
    else if (*family)
        res = akl::cmd_family(params);
    else if (*holonomy)
        res = akl::cmd_holonomy(params, g1, g2);
    else if (*group)
        res = akl::cmd_group(params, g1, g2, point);
    else if (*models)
        res = akl::cmd_models(action);
    else if (*geodesic)
        res = akl::cmd_geodesic(connection_path, point, velocity, total_time, steps);
    else if (*verify)
        res = akl::cmd_verify(filter, inject);

    std::cout << res.output;
    if (!res.error.empty()) std::cerr << res.error << "\n";
    return res.exit_code;
}
