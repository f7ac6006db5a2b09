//-----
// Attribute type statements.
//-----

#include <Declarations.h>

AttributeType "VehicleExteriorColor"
(
  <SuperType val = "QualityAttributeType"/>

  "Values"
  (
    { "Black": Dictionary
      ( English
        ( { "black", "charcoal" } ); ); ,
      "Blue": Dictionary
      ( English
        ( { "blue" } ); ); ,
      "Silver": Dictionary
      ( English
        ( { "silver", "grey" } ); ); ,
      "White": Dictionary
      ( English
        ( { "white", "opal" } ); );
    }
  );
);

AttributeType "VehiclePhysicalDimensionAttributeTypeX"
(
  <SuperType val = "LocationAttributeType"/>
  <ValueSetName ref = VehiclePhysicalDimension/>
);

AttributeType "VehiclePhysicalDimensionAttributeTypeY"
(
  <SuperType val = "LocationAttributeType"/>
  <ValueSetName ref = VehiclePhysicalDimension/>
);

AttributeType "VehiclePhysicalDimensionAttributeTypeZ"
(
    <SuperType val = "LocationAttributeType"/>
    <ValueSetName ref = VehiclePhysicalDimension/>
);

AttributeType "VehicleComponentMaterialCompositionAttributeType"
(
    <SuperType val = "QualityAttributeType"/>
    <ValueSetName ref = VehicleComponentMaterialComposition/>
);

AttributeType "PersonAge"
(
    <SuperType val = "Qualitative"/>

    "Values"
    (
        { "Infantile" : Dictionary ( English ( { "infant" } ) ); ,
        "YoungChild" : Dictionary ( English ( { "young" } ) ); ,
        "Child" : Dictionary ( English ( { "young" } ) ); ,
        "Teenager" : Dictionary ( English ( { "teenage" } ) ); ,
        "Adult" : Dictionary ( English ( { "adult" } ) ); ,
        "MiddleAgedAdult" : Dictionary ( English ( { "middle-aged", "adult" } ) ); ,
        "AdvancedAgedAdult" : Dictionary ( English ( { "elderly", "senior", "older", "old" } ) ); }
    );
);

AttributeType "WalkingState"
(
    <SuperType val = "Qualitative"/>
    <StateAttributeType val = "true"/>

    "Values"
    (
        { "NotWalking",
          "Walking"
        }
    );
);
