#include "apland/measures.hpp"

namespace apland {

MeasureRecord measure_snapshot(const LandscapeSnapshot& snapshot, double disp_fraction) {
  MeasureRecord rec;
  rec.meta = snapshot.meta;
  rec.flat = snapshot.flat;
  rec.nzr = nzr(snapshot.g1);
  if (snapshot.flat) {
    rec.fdc_reason = "flat landscape";
    rec.disp_reason = "flat landscape";
    return rec;
  }
  rec.fdc = fdc(snapshot.grid.pairs, snapshot.g1);
  if (!rec.fdc) rec.fdc_reason = "zero variance";
  rec.disp = disp(snapshot.grid.pairs, snapshot.g1, disp_fraction);
  if (!rec.disp) rec.disp_reason = "fewer than two top cells";
  return rec;
}

}  // namespace apland
