//-----
// The vehicle class of the two-part attribute cluster example. The class
// delimiters and value lists are normalized to the statement grammar; the
// attach and assert lines belong to an instance model and are not Star code.
//-----

// Star Definitions

ObjectFrameClass "VehicleObjectClass"
(
  AttributeTypes
  (
    AttributeType "SpatialLocation"
    (
      <SuperType val = "Locational"/>

      "Values"
      ( {
        "Garage",
        "Driveway",
        "Roadway",
      } );
    );
  AttributeType "Color"
  (
    <SuperType val = "Qualitative"/>

    "Values"
    ( {
      "Red",
      "Green",
      "Blue"
    } );
  );
  );
);
