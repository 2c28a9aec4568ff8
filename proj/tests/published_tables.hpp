#pragma once

// Published dual and primal solutions for the two worked problems, one table
// per parameter value. Dual columns follow the solver's term order:
// objective terms, then constraint terms.

#include <vector>

namespace mogp::testing {

struct PublishedRow {
  double w1;
  std::vector<double> dual;
  std::vector<double> x;
  double z;
};

struct PublishedTable {
  double t;
  const char* label;
  std::vector<PublishedRow> rows;
};

// g(t) = 2t + 2, h(t) = t + 1.
inline const std::vector<PublishedTable> kExample1 = {
    {19, "g=40, h=20",
     {
         {0.1, {.03538166, .04491953, .1629705, .1671291, .5895484, .1009222, .4474897},
          {0.3709596, 3.628046, 3.112426}, 51.40669},
         {0.2, {.06460256, .09304868, .2224467, .1671291, .4527729, .1173440, .4233434},
          {0.5184022, 2.390645, 2.632994}, 58.67673},
         {0.3, {.08981589, .1386930, .2615291, .1526150, .3573470, .1384534, .4258014},
          {0.6181019, 1.885667, 2.426272}, 64.87778},
         {0.4, {.1117080, .1822681, .2912977, .1325447, .2821815, .1616868, .4409492},
          {0.6974348, 1.598181, 2.303659}, 70.51816},
         {0.5, {.1308674, .2238612, .3157730, .1101877, .2193107, .1858413, .4630621},
          {0.7648254, 1.410574, 2.219104}, 75.81600},
     }},
    {20, "g=42, h=21",
     {
         {0.1, {.03595181, .04399913, .1570954, .1630853, .5998684, .1010068, .4519587},
          {0.3783509, 3.570412, 3.082458}, 53.01235},
         {0.2, {.06595986, .09141579, .2162172, .1633865, .4630206, .1163134, .4255522},
          {0.5268679, 2.365203, 2.611029}, 60.19380},
         {0.3, {.09206252, .1364239, .2553973, .1495228, .3665935, .1362168, .4251809},
          {0.6260859, 1.872084, 2.408787}, 66.32737},
         {0.4, {.1148757, .1794227, .2853658, .1301272, .2902086, .1582609, .4374420},
          {0.7042765, 1.590465, 2.289866}, 71.90609},
         {0.5, {.1349398, .2205432, .3100875, .1083816, .2260479, .1813293, .4568453},
          {0.7703444, 1.406016, 2.208535}, 77.14276},
     }},
    {21, "g=44, h=22",
     {
         {0.1, {.0364869, .0431282, .1515729, .1592421, .6095698, .1010810, .4561494},
          {0.3857122, 3.514460, 3.053485}, 54.61683},
         // w05 is printed as .47276742; the extra digit is dropped.
         {0.2, {.0672419, .0898600, .2102984, .1598354, .4727674, .1153346, .4276542},
          {0.5352863, 2.340286, 2.589830}, 61.70927},
         {0.3, {.0941988, .1342586, .2495379, .1465658, .3754388, .1340890, .4246109},
          {0.6340715, 1.858634, 2.391791}, 67.77508},
         {0.4, {.1179082, .1766990, .2796733, .1278009, .2979186, .1549847, .4341022},
          {0.7111610, 1.582766, 2.276326}, 73.29226},
         {0.5, {.1388617, .2173522, .3046089, .1066352, .2325419, .1769891, .4508707},
          {0.7759240, 1.401452, 2.198055}, 78.46815},
     }},
};

// g(t) = t^2, h(t) = t + 1, k(t) = 2t + 3.
inline const std::vector<PublishedTable> kExample2 = {
    {1, "g=1, h=2, k=5",
     {
         {0.1, {.001883184, .7066979, .003912119, .04807176, .2394350, .3624652, .06630413, 1.685529},
          {1.158065, 0.1727019, 0.07871444, 0.4911339}, 23.30086},
         {0.2, {.002875885, .7404825, .003957753, .02103163, .2316522, .3868806, .05431305, 1.773423},
          {1.102102, 0.1814714, 0.06732011, 0.4571373}, 37.49259},
         {0.3, {.003709217, .7521911, .003999773, .01141363, .2286863, .3954820, .05018649, 1.803196},
          {1.048456, 0.1907567, 0.06264038, 0.4494227}, 49.25933},
         {0.4, {.004515186, .7576144, .004050324, .006740309, .2270798, .3995861, .04829802, 1.816394},
          {0.9986112, 0.2002781, 0.05998444, 0.4494268}, 59.15666},
         {0.5, {.005731889, .7604136, .004108534, .004099518, .2260064, .4018303, .04734644, 1.822584},
          {0.9507755, 0.2103546, 0.05817415, 0.4529743}, 67.31155},
     }},
    {2, "g=4, h=3, k=7",
     {
         {0.1, {.002583442, .7428173, .001483374, .02118867, .2319272, .3884648, .05530093, 1.780619},
          {1.031732, 0.1384634, 0.06635765, 0.4694868}, 46.15296},
         {0.2, {.003764835, .7584524, .001511017, .008334759, .2279370, .3999702, .04982283, 1.820288},
          {0.9530635, 0.1498926, 0.06005816, 0.4610817}, 75.76130},
         {0.3, {.004753309, .7629485, .001538947, .004322214, .2264370, .4034642, .04830204, 1.830787},
          {0.8940238, 0.1597912, 0.05750384, 0.4648240}, 100.2160},
         {0.4, {.005718845, .7646817, .001566427, .002491526, .2255415, .4049780, .04776588, 1.834016},
          {0.8449595, 0.1690698, 0.05596250, 0.4713043}, 120.7471},
         {0.5, {.006754852, .7653131, .001594399, .001493452, .2248442, .4057250, .04763040, 1.834235},
          {0.8006811, 0.1784195, 0.05482305, 0.4790883}, 137.6543},
     }},
    {3, "g=9, h=4, k=9",
     {
         {0.1, {.002556200, .7569191, .0007197187, .01069413, .2291109, .3985297, .05083442, 1.818117},
          {0.9275071, 0.1197954, 0.06030440, 0.4689700}, 77.71193},
         {0.2, {.003643589, .7647673, .0007388184, .004008480, .2268418, .4044462, .04813366, 1.837340},
          {0.8441800, 0.1316202, 0.05622785, 0.4728634}, 128.4884},
         {0.3, {.004564563, .7667072, .0007551118, .002044494, .2259287, .4060950, .04752731, 1.841180},
          {0.7876750, 0.1410621, 0.05443038, 0.4812168}, 170.3272},
         {0.4, {.005471832, .7672706, .0007699552, .001169431, .2253182, .4067567, .04741216, 1.841401},
          {0.7425651, 0.1496315, 0.05324933, 0.4901075}, 205.4137},
         {0.5, {.006450544, .7672784, .0007844841, .0006980240, .2247886, .4070418, .04750335, 1.840055},
          {0.7026785, 0.1581251, 0.05231420, 0.4994140}, 234.2872},
     }},
};

}  // namespace mogp::testing
