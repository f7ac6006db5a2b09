// The transform listing exactly as printed: all three index locals are 0.

#include <BasicDefinitions.h>

// Transform for: (source) BehavioralStructuralParentClass.RelativePosition to
// (dest) EverydayObjectStructuralParentClass.EverydayObjectSpatialCoordinates, which is based upon
// PhysicalObjectMillimeterCoordinates:

Transform "RelativePositionSpatialToMillimeterBasedCoords-01"
(
  <Source ref = RelativePosition.SpatialAttributeTypes />
  <Dest ref = PhysicalObjectMillimeterCoordinates.SpatialAttributeTypes />

  bool Routine
  {
    Parameters
    (
      string Source; // one of: "IdenticalLocation", "Adjacent", "NotAdjacent"
      int Dest[3];
    );

    Locals
    (
      int x = 0;
      int y = 0;
      int z = 0;
    );

    if (Source == "IdenticalLocation")
    {
      Dest [x] = 0;
      Dest [y] = 0;
      Dest [z] = 0;
    }
    else if (Source == "Adjacent")
    {
      Dest [x] = 2; // arbitrary distance of 2 millimeters
      Dest [y] = 0;
      Dest [z] = 0;
    }
    else if (Source == "NotAdjacent")
    {
      Dest [x] = 1000; // arbitrary distance of 1000 millimeters
      Dest [y] = 0;
      Dest [z] = 0;
    }

    Return true;
  }
);
