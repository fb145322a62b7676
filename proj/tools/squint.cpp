#include "squint/job.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"squint - super-representation quiver invariant toolkit"};

    std::string job_path;
    squint::RunOptions opts;
    app.add_option("jobfile", job_path, "job file (quiver + commands)")->required();
    app.add_flag("--strict", opts.strict, "nonzero exit when a resource cap is hit");
    app.add_option("--cap", opts.cap, "component basis size cap (default 200000)");
    app.add_option("--csv", opts.csv_path, "write oracle reports to a CSV file");

    CLI11_PARSE(app, argc, argv);

    std::ifstream f(job_path);
    if (!f) {
        std::cerr << "cannot open " << job_path << "\n";
        return 2;
    }
    std::ostringstream ss;
    ss << f.rdbuf();

    auto slash = job_path.find_last_of('/');
    opts.base_dir = (slash == std::string::npos) ? "." : job_path.substr(0, slash);

    try {
        squint::JobFile job = squint::parse_job(ss.str());
        return squint::run_job(job, opts, std::cout);
    } catch (const squint::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
