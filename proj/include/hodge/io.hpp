#ifndef HODGE_IO_HPP
#define HODGE_IO_HPP

#include "hodge/geomodels.hpp"
#include "hodge/orbit.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace hodge {

using Json = nlohmann::json;

// malformed input; path is a JSON pointer to the offending field
struct InputError : std::runtime_error {
    std::string path;
    InputError(std::string p, const std::string& what) : std::runtime_error(p + ": " + what), path(std::move(p)) {}
};

// scalars: integers or strings such as "-3/4", "1/2+3i", "-i"
Json scalarToJson(const Gauss& g);
Gauss scalarFromJson(const Json& j, const std::string& path);
// list of rows
Json matrixToJson(const CMat& m);
CMat matrixFromJson(const Json& j, int rows, int cols, const std::string& path);

// {d, dim, W: [{k, span}], F: [{p, span}], N?, S?}; span is a list of vectors
MHSData mhsFromJson(const Json& j);
Json mhsToJson(const MHSData& m);

// {m, strata: [{depth, cohomology: [{q, dim, types, pairing, partner?}]}],
//  gysin: [{depth, q, matrix}], restriction: [{depth, q, matrix}]}
DegenerationData degenerationFromJson(const Json& j);
Json degenerationToJson(const DegenerationData& d);

Json toJson(const Signature& s);
Json toJson(const SignatureTable& t);
Json toJson(const IndexReport& r);
Json toJson(const MainTheoremReport& r);
Json toJson(const IndexTable& t);

Json readJsonFile(const std::string& path);

} // namespace hodge

#endif
