//-----
// Part-to-whole structure of the person class: a holder dimension system
// and a floating body component with placeholder locations.
//-----

#include <EarthboundObjectDefinitions.h>


ObjectFrameClass "PersonObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary
  (
    English
    (
      { "person", "persons", "human", "humans" }
    );
  );

  HigherClasses
  (
    { "EverydayObjectFrameClass",
      "EarthBoundObjectFrameClass" } // provides orientation specifiers, e.g. "above", "below"
  );

  DimensionSystems
  (
    DimensionSystem "PersonObjectHolder"
    (
      <RoleTrait val = "Holder"/>

      LocationAttributeTypes
      (
        SpatialAttributeTypes
        (
          "RelativePlace"
          (
            <SuperType val = "LocationAttributeType"/>

            "GeneralLocationValueSet"
            (
              <SuperTypeUsage val = "LocationValues" />

              { "PersonHeadSlot", // a compartment or receptacle (i.e. a cuboid region) that can
                // be correlated with coordinates of other dimension systems,
                // e.g. the coordinate-based dimension system, below.
                "PersonBodySlot"
              }
            );
          );
        );
      );
    );

    // (note: this statement declares a local name that is defined to refer to a more-general
    // dimension system called "PhysicalObjectMillimeterCoordinates" that is part of
    // a basic definitions Star code file).
    //
    DimensionSystem "PersonPhysicalCoordinates" (PhysicalObjectMillimeterCoordinates);
  );



Structure
(
  // other person sub-parts here, e.g. "head", "neck"

  ObjectFrameClass "PersonBodyObjectFrameClass" // a part/component
  (
    Dictionary ( English
      (
        {
          "body",
          "bodies"
        }
      ););

    // HigherClasses (not needed here)

    RelationshipToParent
    (
      AtLocations
      (
        AtLocationSet
        (
          <DimensionSystem ref = PersonObjectHolder />
          <Attribute ref = RelativePlace val = "PersonBodySlot" />
        );
        AtLocationSet // placeholders:
        (
          <DimensionSystem ref = PersonPhysicalCoordinates />
          <Attribute ref = X-Coordinate val = "nil" />
          <Attribute ref = Y-Coordinate val = "nil" />
          <Attribute ref = Z-Coordinate val = "nil" />
        );
      );

      // OrientationSpecifiers // (not shown)

      OuterDimensionSystemExtents
      (
        OuterDimensionSystemExtentSet
        (
          <DimensionSystem ref = PersonPhysicalCoordinates />
          <Attribute ref = X-Coordinate val = "nil" />
          <Attribute ref = Y-Coordinate val = "nil" />
          <Attribute ref = Z-Coordinate val = "nil" />
        );
      );

      // DimensionSystems (not needed here)

      // Structure // (this would be used for nested structure within person body)
    ); // (closes RelationshipToParent; missing from the listing)

    ); // "PersonBodyObjectFrameClass"

  ); // Structure

); // "PersonObjectFrameClass"
