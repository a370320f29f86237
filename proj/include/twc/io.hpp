#pragma once

#include <iosfwd>

#include "twc/confl.hpp"

namespace twc {

struct Config {
    int window = 3;
    int dims = 4;
    std::uint64_t seed = 42;
    int cases = 100;
};

// A parsed input file: the section algebra plus named entities, all
// validated on load.
struct Workspace {
    SectionAlgebra alg;
    Config config;
    std::map<std::string, SModule> modules;
    std::map<std::string, AdMorphism> morphisms;
    std::map<std::string, TwObject> objects;
    std::map<std::string, TwMorphism> twmorphisms;
    std::map<std::string, Conflation> conflations;
    // declaration forms, kept for faithful reprinting
    std::map<std::string, std::pair<std::string, std::string>> twmor_ends;  // name -> (src, dst)
    std::map<std::string, std::pair<std::string, std::string>> confl_ends;  // name -> (X, Y)
    std::vector<std::pair<std::string, std::string>> decl_order;            // (kind, name)

    TwMorphism named_twmor(const std::string& name) const;
};

// Parses the text format; diagnostics carry line numbers. The optional
// field override replaces the file's field spec (used for the env override).
Workspace parse_workspace(const std::string& text, const std::string& field_override = "");
std::string print_workspace(const Workspace& ws);

// shipped example algebras
const char* builtin_e1();
const char* builtin_e2();
const char* builtin_e3();

// tag/matrix literal helpers shared by parser and reports
std::string matrix_str(const Matrix& m);
std::string morphism_str(const SectionAlgebra& alg, const AdMorphism& f);

}  // namespace twc
