//-----
// Object frame class listings: the steel ignition key, a cat's structure
// section, a grocery store collection and two derived vehicle classes.
//-----

#include <EverydayObjectDefinitions.h>

// SUPPLEMENT (not listed): the key's placeholders name X/Y/Z-Coordinate in
// VehicleComponentCoordinates, so it is given the millimeter coordinates here.
DimensionSystem "VehicleComponentCoordinates" (PhysicalObjectMillimeterCoordinates);

ObjectFrameClass "SteelIgnitionKeyObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  DictionaryPriorWord
  (
    English
    (
      { "ignition ", "ignition" }
    );
  );
  Dictionary
  (
    English
    (
      { "key", "keys" }
    );
  );

  StructuralParentClassesBase
  (
    { "EverydayObjectStructuralParentClass" }
  );

  RelationshipToParent
  (

AtLocations // (location)
(
  AtLocationSet // placeholders:
  (
    <DimensionSystem ref = VehicleComponentCoordinates />
    <Attribute ref = X-Coordinate val = "nil" />
    <Attribute ref = Y-Coordinate val = "nil" />
    <Attribute ref = Z-Coordinate val = "nil" />
  );
);

OuterDimensionSystemExtents // (size)
(
  OuterDimensionSystemExtentSet // placeholders:
  (
    <DimensionSystem ref = VehicleComponentCoordinates />
    <Attribute ref = X-Coordinate val = "nil" />
    <Attribute ref = Y-Coordinate val = "nil" />
    <Attribute ref = Z-Coordinate val = "nil" />
); // (closes RelationshipToParent; missing from the listing)
  );
);

AttributeTypes
(
  AttributeType "MaterialCompositionAttributeType"
  (
    <SuperType val = "QualityAttributeType"/>

    "Values"
    (
      <SuperTypeUsage val = "QualityValues" />

      { "Brass",
        "Steel" }
    );
  );
);

Attributes
(
  // Every instance of this class has this specific attribute:

  Attribute "MaterialComposition"
  (
    <Attribute ref = MaterialCompositionAttributeType val = "Steel" />
  );
);

// (not needed here) DimensionSystems ();

// (not needed here) Structure ();

); // SteelIgnitionKeyObjectFrameClass



// SUPPLEMENT (not listed): host class for the cat structure section.
ObjectFrameClass "HouseCatObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English ( { "cat", "cats" } ) );

  HigherClasses ( { "EverydayObjectFrameClass" } );

Structure // the following are components of a cat body:
(
  ObjectFrameClass "FrontLegLeft"
  (
    <ProbabilityInStructuralParent expr = 0.98 />

    <StructureTrait val = "Compound"/>

    Dictionary ( English
      (
        { "leg",
          "legs" }
      ););

    RelationshipToParent ();
  );

  // (not shown) ObjectFrameClass "FrontLegRight"
  // (not shown) ObjectFrameClass "RearLegLeft"
  // (not shown) ObjectFrameClass "RearLegRight"
);
); // HouseCatObjectFrameClass

ObjectFrameClass "GroceryStoreObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  DictionaryPriorWord
  (
    English
    (
      { "grocery ", "grocery" }
    );
  );
  Dictionary
  (
    English
    (
      { "store", "stores" }
    );
  );

  Structure
  (
    ObjectFrameClass "CheckoutLaneObjectFrameClass"
    (
      < StructureTrait val = "Compound"/>


<Multiple val = "true" />
<Cardinality val = "nil" /> // placeholder

RelationshipToParent
(
  // Detail not shown: this establishes a cuboid region within which all
  // set members (i.e. each checkout lane) are located.
);

// Attributes: none here, but attributes can also be used to define features for set members

Structure
(
  ObjectFrameClass "LoadingAreaObjectFrameClass"
  (
    // (not shown)
  );
  ObjectFrameClass "CashRegisterObjectFrameClass"
  (
    // (not shown)
  );
);

// Behavior: none here, but behaviors can also be used to define features for set members

); // ObjectFrameClass "CheckoutLaneObjectFrameClass"

); // Structure

); // ObjectFrameClass "GroceryStoreObjectFrameClass"

// SUPPLEMENT (not listed): the higher class of the car and truck classes.
ObjectFrameClass "VehicleObjectFrameClass"
(
  <StructureTrait val = "Compound"/>
  Dictionary ( English ( { "vehicle", "vehicles" } ) );
  HigherClasses ( { "EverydayObjectFrameClass" } );
);

ObjectFrameClass "CarObjectFrameClass"
(
  Dictionary ( English
    (
      {
        "car",
        "cars",
        "auto",
        "autos",
        "automobile",
        "automobiles"
      }
    ) );
  HigherClasses ( { "VehicleObjectFrameClass" } );
);

ObjectFrameClass "TruckObjectFrameClass"
(
  Dictionary ( English


(
  {
    "truck",
    "trucks",
    "pickup",
    "pickups"
  }
););
HigherClasses ( { "VehicleObjectFrameClass" } );
);
