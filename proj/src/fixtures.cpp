#include "brauer/fixtures.hpp"

#include "brauer/errors.hpp"

namespace brauer {

namespace {

constexpr const char* kC3Table = R"json({"characters":[{"name":"X1","values":[[1.0,0.0],[1.0,0.0],[1.0,0.0]]},{"name":"X2","values":[[1.0,0.0],[-0.4999999999999998,0.8660254037844387],[-0.5000000000000004,-0.8660254037844384]]},{"name":"X3","values":[[1.0,0.0],[-0.5000000000000004,-0.8660254037844384],[-0.4999999999999993,0.8660254037844392]]}],"classes":[{"name":"1","size":1,"square":0},{"name":"r","size":1,"square":2},{"name":"r2","size":1,"square":1}],"order":3})json";

constexpr const char* kC5C4Table = R"json({"characters":[{"name":"X1","values":[[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0]]},{"name":"X2","values":[[1.0,0.0],[1.0,0.0],[1.0,0.0],[6.123233995736765e-17,1.0],[-1.0,1.224646799147353e-16],[-1.0,1.224646799147353e-16],[-1.0,1.224646799147353e-16],[-1.8369701987210304e-16,-1.0]]},{"name":"X3","values":[[1.0,0.0],[1.0,0.0],[1.0,0.0],[-1.0,1.224646799147353e-16],[1.0,-2.449293598294706e-16],[1.0,-2.449293598294706e-16],[1.0,-2.449293598294706e-16],[-1.0,3.673940397442061e-16]]},{"name":"X4","values":[[1.0,0.0],[1.0,0.0],[1.0,0.0],[-1.8369701987210304e-16,-1.0],[-1.0,3.673940397442061e-16],[-1.0,3.673940397442061e-16],[-1.0,3.673940397442061e-16],[5.510910596163087e-16,1.0]]},{"name":"X5","values":[[2.0,0.0],[0.6180339887498948,-1.1102230246251565e-16],[-1.618033988749895,2.220446049250313e-16],[0.0,0.0],[2.0,0.0],[0.6180339887498948,-1.1102230246251565e-16],[-1.618033988749895,2.220446049250313e-16],[0.0,0.0]]},{"name":"X6","values":[[2.0,0.0],[0.6180339887498948,-1.1102230246251565e-16],[-1.618033988749895,2.220446049250313e-16],[0.0,0.0],[-2.0,2.449293598294706e-16],[-0.6180339887498947,1.1102230246251565e-16],[1.618033988749895,-4.440892098500626e-16],[0.0,0.0]]},{"name":"X7","values":[[2.0,0.0],[-1.618033988749895,4.440892098500626e-16],[0.6180339887498949,-1.1102230246251565e-16],[0.0,0.0],[2.0,0.0],[-1.618033988749895,4.440892098500626e-16],[0.6180339887498949,-1.1102230246251565e-16],[0.0,0.0]]},{"name":"X8","values":[[2.0,0.0],[-1.618033988749895,4.440892098500626e-16],[0.6180339887498949,-1.1102230246251565e-16],[0.0,0.0],[-2.0,2.449293598294706e-16],[1.618033988749895,-6.661338147750939e-16],[-0.6180339887498949,1.1102230246251565e-16],[0.0,0.0]]}],"classes":[{"name":"1","size":1,"square":0},{"name":"r","size":2,"square":2},{"name":"r2","size":2,"square":1},{"name":"t","size":5,"square":4},{"name":"t2","size":1,"square":0},{"name":"rt2","size":2,"square":2},{"name":"r2t2","size":2,"square":1},{"name":"t3","size":5,"square":4}],"order":20})json";

constexpr const char* kC15C4Table = R"json({"characters":[{"name":"X1","values":[[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0]]},{"name":"X2","values":[[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[6.12323399573676e-17,1.0],[-1.0,1.224646799147352e-16],[-1.0,1.224646799147352e-16],[-1.8369701987210282e-16,-1.0]]},{"name":"X3","values":[[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[-1.0,1.224646799147352e-16],[1.0,-2.449293598294704e-16],[1.0,-2.449293598294704e-16],[-1.0,3.6739403974420564e-16]]},{"name":"X4","values":[[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[-1.8369701987210282e-16,-1.0],[-1.0,3.6739403974420564e-16],[-1.0,3.6739403974420564e-16],[5.510910596163084e-16,1.0]]},{"name":"X5","values":[[2.0,0.0],[-1.0000000000000004,8.881784197001252e-16],[2.0,-4.3332712680977906e-15],[-1.0000000000000002,-2.220446049250313e-16],[-0.9999999999999988,1.3877787807814457e-15],[0.0,0.0],[2.0,-3.466617014478232e-15],[-0.9999999999999998,8.659739592076221e-16],[0.0,0.0]]},{"name":"X6","values":[[2.0,0.0],[-1.0000000000000004,8.881784197001252e-16],[2.0,-4.3332712680977906e-15],[-1.0000000000000002,-2.220446049250313e-16],[-0.9999999999999988,1.3877787807814457e-15],[0.0,0.0],[-2.0,3.711546374307703e-15],[0.9999999999999998,-1.0880185641326535e-15],[0.0,0.0]]},{"name":"X7","values":[[4.0,0.0],[0.5,1.936491673103707],[-1.0000000000000004,2.2204460492503132e-17],[-2.0,6.661338147750939e-16],[0.4999999999999992,-1.936491673103707],[0.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0]]},{"name":"X8","values":[[4.0,0.0],[-1.0000000000000004,4.2188474935755947e-16],[-1.0,3.3306690738754696e-16],[4.0,-6.798646677177574e-15],[-1.0000000000000002,4.440892098500626e-16],[0.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0]]},{"name":"X9","values":[[4.0,0.0],[0.5000000000000006,-1.936491673103707],[-1.0000000000000004,8.881784197001252e-16],[-2.000000000000004,3.552713678800501e-15],[0.5000000000000036,1.93649167310371],[0.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0]]}],"classes":[{"name":"1","size":1,"square":0},{"name":"r","size":4,"square":1},{"name":"r3","size":4,"square":2},{"name":"r5","size":2,"square":3},{"name":"r7","size":4,"square":4},{"name":"t","size":15,"square":6},{"name":"t2","size":5,"square":0},{"name":"rt2","size":10,"square":3},{"name":"t3","size":15,"square":6}],"order":60})json";

constexpr const char* kC15C8Table = R"json({"characters":[{"name":"X1","values":[[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0]]},{"name":"X2","values":[[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[0.7071067811865482,0.7071067811865481],[6.123233995736759e-17,1.0],[6.123233995736759e-17,1.0],[-0.7071067811865481,0.7071067811865482],[-1.0,1.2246467991473517e-16],[-1.0,1.2246467991473517e-16],[-1.0,1.2246467991473517e-16],[-1.0,1.2246467991473517e-16],[-1.0,1.2246467991473517e-16],[-0.7071067811865482,-0.7071067811865481],[-1.8369701987210277e-16,-1.0],[-1.8369701987210277e-16,-1.0],[0.7071067811865481,-0.7071067811865482]]},{"name":"X3","values":[[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[6.123233995736759e-17,1.0],[-1.0,1.2246467991473517e-16],[-1.0,1.2246467991473517e-16],[-1.8369701987210277e-16,-1.0],[1.0,-2.4492935982947035e-16],[1.0,-2.4492935982947035e-16],[1.0,-2.4492935982947035e-16],[1.0,-2.4492935982947035e-16],[1.0,-2.4492935982947035e-16],[3.06161699786838e-16,1.0],[-1.0,3.6739403974420554e-16],[-1.0,3.6739403974420554e-16],[-4.286263797015731e-16,-1.0]]},{"name":"X4","values":[[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[-0.7071067811865481,0.7071067811865482],[-1.8369701987210277e-16,-1.0],[-1.8369701987210277e-16,-1.0],[0.7071067811865482,0.7071067811865481],[-1.0,3.6739403974420554e-16],[-1.0,3.6739403974420554e-16],[-1.0,3.6739403974420554e-16],[-1.0,3.6739403974420554e-16],[-1.0,3.6739403974420554e-16],[0.7071067811865479,-0.707106781186549],[5.510910596163083e-16,1.0],[5.510910596163083e-16,1.0],[-0.7071067811865481,-0.7071067811865482]]},{"name":"X5","values":[[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[-1.0,1.2246467991473517e-16],[1.0,-2.4492935982947035e-16],[1.0,-2.4492935982947035e-16],[-1.0,3.6739403974420554e-16],[1.0,-4.898587196589407e-16],[1.0,-4.898587196589407e-16],[1.0,-4.898587196589407e-16],[1.0,-4.898587196589407e-16],[1.0,-4.898587196589407e-16],[-1.0,6.12323399573676e-16],[1.0,-7.347880794884111e-16],[1.0,-7.347880794884111e-16],[-1.0,8.572527594031462e-16]]},{"name":"X6","values":[[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[-0.7071067811865482,-0.7071067811865481],[3.06161699786838e-16,1.0],[3.06161699786838e-16,1.0],[0.7071067811865479,-0.707106781186549],[-1.0,6.12323399573676e-16],[-1.0,6.12323399573676e-16],[-1.0,6.12323399573676e-16],[-1.0,6.12323399573676e-16],[-1.0,6.12323399573676e-16],[0.7071067811865481,0.7071067811865482],[-2.694841938760765e-15,-1.0],[-2.694841938760765e-15,-1.0],[-0.7071067811865478,0.7071067811865491]]},{"name":"X7","values":[[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[-1.8369701987210277e-16,-1.0],[-1.0,3.6739403974420554e-16],[-1.0,3.6739403974420554e-16],[5.510910596163083e-16,1.0],[1.0,-7.347880794884111e-16],[1.0,-7.347880794884111e-16],[1.0,-7.347880794884111e-16],[1.0,-7.347880794884111e-16],[1.0,-7.347880794884111e-16],[-2.694841938760765e-15,-1.0],[-1.0,1.1021821192326165e-15],[-1.0,1.1021821192326165e-15],[-4.904777002955302e-16,1.0]]},{"name":"X8","values":[[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[1.0,0.0],[0.7071067811865481,-0.7071067811865482],[-4.286263797015731e-16,-1.0],[-4.286263797015731e-16,-1.0],[-0.7071067811865481,-0.7071067811865482],[-1.0,8.572527594031462e-16],[-1.0,8.572527594031462e-16],[-1.0,8.572527594031462e-16],[-1.0,8.572527594031462e-16],[-1.0,8.572527594031462e-16],[-0.7071067811865478,0.7071067811865491],[-4.904777002955302e-16,1.0],[-4.904777002955302e-16,1.0],[0.7071067811865519,0.707106781186544]]},{"name":"X9","values":[[2.0,0.0],[-1.0000000000000002,8.881784197001252e-16],[2.0,-4.3332712680977906e-15],[-1.0000000000000002,-2.220446049250313e-16],[-0.9999999999999994,1.3877787807814457e-15],[0.0,0.0],[2.0,-3.466617014478232e-15],[-0.9999999999999998,8.659739592076221e-16],[0.0,0.0],[2.0,0.0],[-1.0000000000000002,8.881784197001252e-16],[2.0,-4.3332712680977906e-15],[-1.0000000000000002,-2.220446049250313e-16],[-0.9999999999999994,1.3877787807814457e-15],[0.0,0.0],[2.0,-3.466617014478232e-15],[-0.9999999999999998,8.659739592076221e-16],[0.0,0.0]]},{"name":"X10","values":[[2.0,0.0],[-1.0000000000000002,8.881784197001252e-16],[2.0,-4.3332712680977906e-15],[-1.0000000000000002,-2.220446049250313e-16],[-0.9999999999999994,1.3877787807814457e-15],[0.0,0.0],[-2.0,3.711546374307703e-15],[0.9999999999999997,-1.0880185641326535e-15],[0.0,0.0],[2.0,-4.898587196589407e-16],[-1.0000000000000002,1.1102230246251565e-15],[2.0,-4.823129987756731e-15],[-1.0,0.0],[-0.9999999999999994,1.609823385706477e-15],[0.0,0.0],[-2.0,4.201405093966649e-15],[0.9999999999999998,-1.3100631690576848e-15],[0.0,0.0]]},{"name":"X11","values":[[2.0,0.0],[-1.0000000000000002,8.881784197001252e-16],[2.0,-4.3332712680977906e-15],[-1.0000000000000002,-2.220446049250313e-16],[-0.9999999999999994,1.3877787807814457e-15],[0.0,0.0],[-3.83401105422245e-15,-2.0],[1.0880185641326535e-15,0.9999999999999997],[0.0,0.0],[-2.0,7.347880794884111e-16],[1.0000000000000004,-1.3322676295501878e-15],[-2.0,5.068059347586213e-15],[1.0,-2.220446049250313e-16],[0.9999999999999994,-1.8318679906315083e-15],[0.0,0.0],[4.568799133710862e-15,2.0],[-1.3100631690576848e-15,-0.9999999999999999],[0.0,0.0]]},{"name":"X12","values":[[2.0,0.0],[-1.0000000000000002,8.881784197001252e-16],[2.0,-4.3332712680977906e-15],[-1.0000000000000002,-2.220446049250313e-16],[-0.9999999999999994,1.3877787807814457e-15],[0.0,0.0],[3.5890816943929794e-15,2.0],[-8.659739592076221e-16,-0.9999999999999998],[0.0,0.0],[-2.0,2.4492935982947035e-16],[1.0000000000000002,-1.1102230246251565e-15],[-2.0,4.5782006279272696e-15],[1.0000000000000002,0.0],[0.9999999999999994,-1.609823385706477e-15],[0.0,0.0],[-3.83401105422245e-15,-2.0],[1.0880185641326535e-15,0.9999999999999997],[0.0,0.0]]},{"name":"X13","values":[[4.0,0.0],[0.49999999999999994,1.9364916731037083],[-1.0000000000000002,1.1102230246251566e-17],[-2.0,6.661338147750939e-16],[0.49999999999999967,-1.9364916731037083],[0.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0],[4.0,0.0],[0.49999999999999994,1.9364916731037083],[-1.0000000000000002,1.1102230246251566e-17],[-2.0,6.661338147750939e-16],[0.49999999999999967,-1.9364916731037083],[0.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0]]},{"name":"X14","values":[[4.0,0.0],[0.49999999999999994,1.9364916731037083],[-1.0000000000000002,1.1102230246251566e-17],[-2.0,6.661338147750939e-16],[0.49999999999999967,-1.9364916731037083],[0.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0],[-4.0,4.898587196589407e-16],[-0.5000000000000003,-1.9364916731037083],[1.0000000000000002,-4.440892098500626e-16],[2.0000000000000004,-1.1102230246251565e-15],[-0.4999999999999996,1.9364916731037085],[0.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0]]},{"name":"X15","values":[[4.0,0.0],[-1.0000000000000002,4.3298697960381104e-16],[-1.0,3.3306690738754696e-16],[4.0,-6.798646677177574e-15],[-1.0000000000000002,4.440892098500626e-16],[0.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0],[4.0,0.0],[-1.0000000000000002,4.3298697960381104e-16],[-1.0,3.3306690738754696e-16],[4.0,-6.798646677177574e-15],[-1.0000000000000002,4.440892098500626e-16],[0.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0]]},{"name":"X16","values":[[4.0,0.0],[-1.0000000000000002,4.3298697960381104e-16],[-1.0,3.3306690738754696e-16],[4.0,-6.798646677177574e-15],[-1.0000000000000002,4.440892098500626e-16],[0.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0],[-4.0,4.898587196589407e-16],[1.0000000000000002,-4.51490696680897e-16],[1.0,-5.551115123125783e-16],[-4.0,7.288505396836515e-15],[1.0000000000000002,-6.661338147750939e-16],[0.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0]]},{"name":"X17","values":[[4.0,0.0],[0.5000000000000003,-1.9364916731037083],[-0.9999999999999984,8.881784197001252e-16],[-2.000000000000002,3.552713678800501e-15],[0.5000000000000036,1.9364916731037132],[0.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0],[4.0,0.0],[0.5000000000000003,-1.9364916731037083],[-0.9999999999999984,8.881784197001252e-16],[-2.000000000000002,3.552713678800501e-15],[0.5000000000000036,1.9364916731037132],[0.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0]]},{"name":"X18","values":[[4.0,0.0],[0.5000000000000003,-1.9364916731037083],[-0.9999999999999984,8.881784197001252e-16],[-2.000000000000002,3.552713678800501e-15],[0.5000000000000036,1.9364916731037132],[0.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0],[-4.0,4.898587196589407e-16],[-0.5000000000000001,1.9364916731037085],[1.0,-1.1102230246251565e-15],[2.000000000000002,-3.9968028886505635e-15],[-0.5000000000000036,-1.9364916731037123],[0.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0]]}],"classes":[{"name":"1","size":1,"square":0},{"name":"r","size":4,"square":1},{"name":"r3","size":4,"square":2},{"name":"r5","size":2,"square":3},{"name":"r7","size":4,"square":4},{"name":"t","size":15,"square":6},{"name":"t2","size":5,"square":9},{"name":"rt2","size":10,"square":12},{"name":"t3","size":15,"square":15},{"name":"t4","size":1,"square":0},{"name":"rt4","size":4,"square":1},{"name":"r3t4","size":4,"square":2},{"name":"r5t4","size":2,"square":3},{"name":"r7t4","size":4,"square":4},{"name":"t5","size":15,"square":6},{"name":"t6","size":5,"square":9},{"name":"rt6","size":10,"square":12},{"name":"t7","size":15,"square":15}],"order":120})json";

}  // namespace

BrauerTree ree_tree() {
  BrauerTree tree;
  tree.edges = {
      {"E0", {"v0", "v1"}},  {"E1", {"v1", "v2"}},  {"E2", {"v2", "v3"}},
      {"E3", {"v3", "v4"}},  {"E4", {"v2", "p"}},   {"E4*", {"v2", "q"}},
      {"E5", {"p", "u5"}},   {"E5*", {"q", "w5"}},  {"E6", {"p", "u6"}},
      {"E6*", {"q", "w6"}},  {"E7", {"p", "u7"}},   {"E7*", {"q", "w7"}},
  };
  tree.rotations = {
      {"v0", {"E0"}},
      {"v1", {"E0", "E1"}},
      {"v2", {"E2", "E4", "E1", "E4*"}},
      {"v3", {"E2", "E3"}},
      {"v4", {"E3"}},
      {"p", {"E7", "E5", "E6", "E4"}},
      {"q", {"E7*", "E4*", "E6*", "E5*"}},
      {"u5", {"E5"}},
      {"u6", {"E6"}},
      {"u7", {"E7"}},
      {"w5", {"E5*"}},
      {"w6", {"E6*"}},
      {"w7", {"E7*"}},
  };
  tree.exceptional = "v3";
  tree.multiplicity = 9;
  tree.real_stem = {"v0", "v1", "v2", "v3", "v4"};
  return tree;
}

BrauerTree star_tree_e3_m2() {
  BrauerTree tree;
  tree.edges = {
      {"E0", {"c", "x0"}},
      {"E1", {"c", "x1"}},
      {"E1*", {"c", "x2"}},
  };
  tree.rotations = {
      {"c", {"E0", "E1", "E1*"}},
      {"x0", {"E0"}},
      {"x1", {"E1"}},
      {"x2", {"E1*"}},
  };
  tree.exceptional = "c";
  tree.multiplicity = 2;
  tree.real_stem = {"x0", "c"};
  return tree;
}

std::vector<std::string> fixture_table_names() {
  return {"c3", "c5c4", "c15c4", "c15c8"};
}

const char* fixture_table_json(const std::string& name) {
  if (name == "c3") return kC3Table;
  if (name == "c5c4") return kC5C4Table;
  if (name == "c15c4") return kC15C4Table;
  if (name == "c15c8") return kC15C8Table;
  throw FormatError("unknown fixture table: " + name);
}

}  // namespace brauer
