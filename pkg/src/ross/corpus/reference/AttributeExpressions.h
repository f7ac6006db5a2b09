//-----
// Attribute base expressions, dimension set expressions, at-location sets,
// outer extent sets and a standalone populated object class.
//-----

#include <EverydayObjectDefinitions.h>

//-----
// SUPPLEMENT (not listed): a host class that defines the attribute types
// named by the seven attribute base expression forms.
//-----
ObjectFrameClass "AttributeFormsObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English ( { "nil" } ) );

  HigherClasses ( { "EverydayObjectFrameClass" } );

  AttributeTypes
  (
    AttributeType "PersonWeight"
    (
      <SuperType val = "Qualitative"/>
      "ValueSet" ( <SuperTypeUsage val = "QualitativeValues" /> { 0 .. 1000 } );
    );
    AttributeType "AttributeTypeX"
    (
      <SuperType val = "Qualitative"/>
      "ValueSet" ( <SuperTypeUsage val = "QualitativeValues" /> { 0 .. 1000 } );
    );
    AttributeType "RelativePositionX"
    (
      <SuperType val = "Qualitative"/>
      "ValueSet" ( <SuperTypeUsage val = "QualitativeValues" /> { 0 .. 1000 } );
    );
    AttributeType "EssentialValueAttributeType"
    (
      <SuperType val = "Qualitative"/>
      "ValueSet" ( StringLiteral );
    );
  );
);

// SUPPLEMENT (not listed): the seven value forms gathered into one
// standalone populated object class.
PopulatedObjectClass "AttributeBaseExpressionForms"
(
  <StructuralParentClass ref = EverydayObjectStructuralParentClass />
  <ObjectFrameClass ref = AttributeFormsObjectFrameClass />
  <DimensionSystem ref = PhysicalObjectMillimeterCoordinates />

  <Attribute ref = X-Coordinate val = "450" />

  <Attribute ref = PersonWeight range = {10 .. 800} />

  <Attribute ref = AttributeTypeX var = x$ />

  <Attribute ref = RelativePositionX expr = (x$ + 1) />

  <Attribute ref = AttributeTypeX expr = (x1$ < (x$ - 36)) />

  <Attribute ref = EssentialValueAttributeType routine = "RenderAnimalHead" />

  <Attribute ref = EssentialValueAttributeType bitmap = "AnimalHead3D.dat" />
);

//-----
// SUPPLEMENT (not listed): a parent class with a holder dimension system and
// the component classes whose relationship-to-parent sections carry the
// at-location and extent listings.
//-----

// SUPPLEMENT (not listed): extents use the parent's coordinate system.
DimensionSystem "AnimalComponentMillimeterCoordinates" (PhysicalObjectMillimeterCoordinates);

ObjectFrameClass "LocatedPartsObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English ( { "nil" } ) );

  HigherClasses ( { "EverydayObjectFrameClass" } );

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
            <SuperType val = "Locational"/>
            "ValueSet"
            (
              <SuperTypeUsage val = "LocationalValues" />
              { "PersonHeadReceptacle", "PersonBodyReceptacle" }
            );
          );
        );
      );
    );
  );

  Structure
  (
    ObjectFrameClass "DimensionSetPart"
    (
      RelationshipToParent
      (
        AtLocations
        (
          AtLocationSet
          (
            <DimensionSystem ref = PhysicalObjectMillimeterCoordinates />
            <Attribute ref = X-Coordinate val = "20" />
            <Attribute ref = Y-Coordinate val = "20" />
            <Attribute ref = Z-Coordinate val = "35" />
          );
        );
      );
    );

    ObjectFrameClass "BasicAtLocationPart"
    (
      RelationshipToParent
      (
        AtLocations
        (
          AtLocationSet
          (
            <DimensionSystem ref = PhysicalObjectMillimeterCoordinates />
            <Attribute ref = X-Coordinate val = "20" />
            <Attribute ref = Y-Coordinate val = "20" />
            <Attribute ref = Z-Coordinate val = "0" />
          );
        );
      );
    );

    ObjectFrameClass "HolderPart"
    (
      RelationshipToParent
      (
        AtLocations
        (
          AtLocationSet // a DimensionSetExpression
          (
            <DimensionSystem ref = PersonObjectHolder />
            <Attribute ref = RelativePlace val = "PersonHeadReceptacle" />
          );
        );
      );
    );

    ObjectFrameClass "AnchorPointPart"
    (
      RelationshipToParent
      (
        AtLocations
        (
          AtLocationSet
          (
            <DimensionSystemType val = "CartesianCoordinates" />
            <AnchorPoint type = "Numeric" val = "[0,0,0]" />
            <DimensionSystem ref = PhysicalObjectMillimeterCoordinates />
            <Attribute ref = X-Coordinate val = "20" />
            <Attribute ref = Y-Coordinate val = "20" />
            <Attribute ref = Z-Coordinate val = "0" />
          );
        );
      );
    );

    ObjectFrameClass "TwoLocationSetsPart"
    (
      RelationshipToParent
      (
        AtLocations
        (
          AtLocationSet
          (
            <DimensionSystem ref = PersonObjectHolder />
            <Attribute ref = RelativePlace val = "PersonHeadReceptacle" />
          );
          AtLocationSet // (the Origin) // [0,0,0] situated @ [20,20,0]
          (
            <DimensionSystemType val = "CartesianCoordinates" />
            <AnchorPoint type = "Numeric" val = "[0,0,0]" />
            <DimensionSystem ref = PhysicalObjectMillimeterCoordinates />
            <Attribute ref = X-Coordinate val = "20" />
            <Attribute ref = Y-Coordinate val = "20" />
            <Attribute ref = Z-Coordinate val = "0" />
          );
        );
      );
    );

    ObjectFrameClass "ExtentPart"
    (
      RelationshipToParent
      (
        OuterDimensionSystemExtents
        (
          OuterDimensionSystemExtentSet
          (
            <DimensionSystem ref = AnimalComponentMillimeterCoordinates />
            <Attribute ref = X-Coordinate val = "nil" />
            <Attribute ref = Y-Coordinate val = "nil" />
            <Attribute ref = Z-Coordinate val = "nil" />
          );
        );
      );
    );
  );
);

//-----
// SUPPLEMENT (not listed): the house cat class used by the standalone
// populated object class and by the two-part attribute cluster.
//-----
ObjectFrameClass "HouseCatObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English ( { "cat", "cats" } ) );

  HigherClasses ( { "EverydayObjectFrameClass" } );

  AttributeTypes
  (
    AttributeType "ExteriorColor"
    (
      <SuperType val = "Qualitative"/>
      "Values" ( { "Black", "White", "Brown", "Grey" } );
    );
    AttributeType "StandingState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true"/>
      "Values" ( { "Standing", "Sitting" } );
    );
  );
);

PopulatedObjectClass "HouseCatBrownSitting"
(
  <StructuralParentClass ref = EverydayObjectStructuralParentClass />
  <ObjectFrameClass ref = HouseCatObjectFrameClass />

  // TwoPartAttributeCluster:
  // DimensionSetExpression:
  <DimensionSystem ref = PhysicalObjectMillimeterCoordinates />
  <Attribute ref = X-Coordinate var = x$ />
  <Attribute ref = Y-Coordinate var = y$ />
  <Attribute ref = Z-Coordinate var = z$ />
  // value attributes:
  <Attribute ref = ExteriorColor val = "Brown" />
  <Attribute ref = StandingState val = "Sitting" />
);
