// File formats and JSON serialization.
//
//   family file    JSON: {"universe": n', "orders": [[ids...], ...]},
//                  cyclic families identical plus "cyclic": true
//   matrix file    lines of '0'/'1' characters
//   edge-ordered   first line "n m", then m lines "u v" in rank order
//   geometry file  first line "n m", n lines "x y", m lines "u v"
#ifndef ORDEX_IO_HPP
#define ORDEX_IO_HPP

#include <string>

#include "ordex/audit.hpp"
#include "ordex/constructions.hpp"
#include "ordex/edge_ordered.hpp"
#include "ordex/geo.hpp"
#include "ordex/orders.hpp"
#include "ordex/regularize.hpp"
#include "ordex/zo_matrix.hpp"

namespace ordex {

struct FamilyDocument {
    bool cyclic = false;
    OrderFamily linear;     // cyclic inputs are linearized at their canonical start
    CyclicFamily raw_cyclic;
};

FamilyDocument family_from_json(const std::string& text);
FamilyDocument load_family_file(const std::string& path);
std::string family_to_json(const OrderFamily& f);
void save_family_file(const std::string& path, const OrderFamily& f);

FamilySeedSpec seed_spec_from_json(const std::string& text);
FamilySeedSpec load_seed_spec_file(const std::string& path);

ZeroOneMatrix matrix_from_text(const std::string& text);
ZeroOneMatrix load_matrix_file(const std::string& path);
std::string matrix_to_text(const ZeroOneMatrix& m);
void save_matrix_file(const std::string& path, const ZeroOneMatrix& m);

EdgeOrderedGraph eograph_from_text(const std::string& text);
EdgeOrderedGraph load_eograph_file(const std::string& path);
std::string eograph_to_text(const EdgeOrderedGraph& g);
void save_eograph_file(const std::string& path, const EdgeOrderedGraph& g);

GeometricGraph geometry_from_text(const std::string& text);
GeometricGraph load_geometry_file(const std::string& path);
std::string geometry_to_text(const GeometricGraph& g);
void save_geometry_file(const std::string& path, const GeometricGraph& g);

std::string audit_report_to_json(const AuditReport& rep);
std::string regularity_report_to_json(const RegularityReport& rep);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace ordex

#endif
