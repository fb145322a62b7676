#pragma once

#include "squint/oracle.hpp"
#include "squint/ring.hpp"
#include "squint/semi_invariants.hpp"
#include "squint/textio.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace squint {

struct CmdPaths {
    int maxlen = 1;
};
struct CmdRingel {
    std::optional<SuperDimVector> beta;
};
struct CmdClassify {};
struct CmdNormalize {
    int vertex = -1;
};
struct CmdStraces {
    int maxlen = 1;
};
struct CmdPolyDef {
    std::string name;
    Polynomial value;
};
struct CmdDetlike {
    std::string name;
    DetLikeSpec spec;
};
struct CmdPolarizeSplit {
    std::string poly;
    std::vector<std::vector<int>> split; // per edge
};
struct CmdPolarizeCheck {
    std::string poly;
    std::set<int> t_edges;
};
struct CmdCheckInvariant {
    std::string poly;
};
struct CmdCheckWeight {
    Weight weight;
    std::string poly;
};
struct CmdOracle {
    MultiDegree degree;
    std::optional<int> compare_maxlen;
};
struct CmdHomExt {
    std::string file_a;
    std::string file_b;
};
struct CmdBerezinian {
    int edge = -1;
};

using Command =
    std::variant<CmdPaths, CmdRingel, CmdClassify, CmdNormalize, CmdStraces, CmdPolyDef,
                 CmdDetlike, CmdPolarizeSplit, CmdPolarizeCheck, CmdCheckInvariant, CmdCheckWeight,
                 CmdOracle, CmdHomExt, CmdBerezinian>;

struct JobFile {
    Setup setup;
    RingPtr ctx;
    std::vector<Command> commands;
};

JobFile parse_job(const std::string& text);

ConcreteSuperRep parse_rep_file(const Quiver& q, const std::string& text);

struct RunOptions {
    bool strict = false;
    long cap = 200000;
    std::string csv_path;    // empty: no CSV
    std::string base_dir;    // directory for homext file lookups
};

/// Executes the commands in order; returns the process exit code:
/// 0 all pass, 1 any FAIL, 3 resource cap hit under --strict.
int run_job(const JobFile& job, const RunOptions& opts, std::ostream& out);

} // namespace squint
