//=====
// { Definitions from BasicDefinitions.h }
//
// Description:
//
// General-purpose supporting definitions that are used by other
// definitions: including value sets, mapping, dimension systems.
//
//=====

//-----
// Value sets
//-----
// SUPPLEMENT (not listed): the base value sets named by the coordinate and
// timeline dimension systems below.
ValueSet "Millimeter" (IntegerConstant);
ValueSet "Second" (IntegerConstant);

//-----
// Dimension Systems
//-----
//
DimensionSystem "RelativePosition" // Dimension system that is used
                                   // only by behavior classes:
(
  LocationAttributeTypes
  (
    SpatialAttributeTypes
    (
      "RelativeLocation"
      (
        <SuperType val = "Locational"/>

        "ValueSet"
        (
          <SuperTypeUsage val = "LocationalValues" />

          { "Identical",
            // (the following enum values allow for relative placement of actor/actee/extra object instances)
            "Adjacent1",
            "Adjacent2",
            "Adjacent3",
            "NotAdjacent" }
        );
      );
    );
    TemporalAttributeTypes
    (
      "RelativeTime"
      (
        <SuperType val = "Locational"/>

        "ValueSet"
        (
          <SuperTypeUsage val = "LocationalValues" />

          { "Identical", // e.g. expr = (t$+0) // (identical)
            "After",     // e.g. expr = (t$+1) // (after)
            "Before" }   // e.g. expr = (t$+2) // (before)
        );
      );
    );
  );
); // DimensionSystem "RelativePosition"

Integer lenMaxPhysicalDimension = 1000000000;
// (1 million meters is large enough for the intended uses
// of this dimension system)

DimensionSystem "PhysicalObjectMillimeterCoordinates"
(
  LocationAttributeTypes
  (
    SpatialAttributeTypes
    (
      "X-Coordinate"
      (
        <SuperType val = "Locational"/>
        "ValueSet"
        (
          <BaseValueSet ref = Millimeter />
          <SuperTypeUsage val = "LocationalValues" />
          { 0, .. lenMaxPhysicalDimension }
        );
      );
      "Y-Coordinate"
      (
        <SuperType val = "Locational"/>
        "ValueSet"
        (
          <BaseValueSet ref = Millimeter />
          <SuperTypeUsage val = "LocationalValues" />
          { 0, .. lenMaxPhysicalDimension }
        );
      );
      "Z-Coordinate"
      (
        <SuperType val = "Locational"/>
        "ValueSet"
        (
          <BaseValueSet ref = Millimeter />
          <SuperTypeUsage val = "LocationalValues" />
          { 0, .. lenMaxPhysicalDimension }
        );
      );
    );
  );
); // DimensionSystem "PhysicalObjectMillimeterCoordinates"

Integer lenMaxTimelineValue = 1000000;
// (1 million seconds is large enough for the intended uses
// of this dimension system)

DimensionSystem "PhysicalObjectSecondBasedTimeline"
(
  LocationAttributeTypes
  (
    TemporalAttributeTypes
    (
      "AttributeTypeTime"
      (
        <SuperType val = "Locational"/>
        "ValueSet"
        (
          <BaseValueSet ref = Second />
          <SuperTypeUsage val = "LocationalValues" />
          { 1, .. lenMaxTimelineValue }
        );
      );
    );
  );
); // DimensionSystem "PhysicalObjectSecondBasedTimeline"
