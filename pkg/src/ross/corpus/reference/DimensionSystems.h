//-----
// Dimension system and specification system statements.
//-----

#include <AttributeTypes.h>

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
          { 1, .. lenMaxPhysicalDimension }
        );
      );
      "Y-Coordinate"
      (
        <SuperType val = "Locational"/>
        "ValueSet"
        (
          <BaseValueSet ref = Millimeter />
          <SuperTypeUsage val = "LocationalValues" />
          { 1, .. lenMaxPhysicalDimension }
        );
      );
      "Z-Coordinate"
      (
        <SuperType val = "Locational"/>
        "ValueSet"
        (
          <BaseValueSet ref = Millimeter />
          <SuperTypeUsage val = "LocationalValues" />
          { 1, .. lenMaxPhysicalDimension }
        );
      );
    );
  );
); // DimensionSystem "PhysicalObjectMillimeterCoordinates"

// SUPPLEMENT (not listed): the timeline type named by VehicleComponentCoordinates.
ValueSet "Second" (IntegerConstant);

AttributeType "SecondBasedTimelineAttributeType"
(
  <SuperType val = "Locational"/>
  "ValueSet"
  (
    <BaseValueSet ref = Second />
    <SuperTypeUsage val = "LocationalValues" />
    { 1 .. 1000000 }
  );
);

DimensionSystem "VehicleComponentCoordinates"
(
  LocationAttributeTypes
  (
    SpatialAttributeTypes
    (
      VehiclePhysicalDimensionAttributeTypeX;
      VehiclePhysicalDimensionAttributeTypeY;
      VehiclePhysicalDimensionAttributeTypeZ;
    );
    TemporalAttributeTypes
    (
      SecondBasedTimelineAttributeType;
    );
  );
);

// SUPPLEMENT (not listed): the renamed system used by the specification system.
DimensionSystem "MillimeterCoordinates" (PhysicalObjectMillimeterCoordinates);

SpecificationSystem "VehicleComponentPhysicalComposition"
(
  DimensionSystem "VehicleComponentCoordinates" (MillimeterCoordinates);

  InnerContent
  (
    QualityAttributeTypes
    (
      "EssentialValueType" (VehicleComponentMaterialCompositionAttributeType);
    );
  );
);
