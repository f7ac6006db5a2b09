//-----
// Declarations, value sets and mappings.
//-----

ValueSet "Millimeter"
(
  IntegerConstant
);

Integer lenMaxVehiclePhysicalDimension = 12000; // vehicle max size in any dimension

ValueSet "VehiclePhysicalDimension"
(
  <BaseValueSet ref = Millimeter /> // the unit of measure

  <SuperTypeUsage val = "Locational" />

  { 1, .. lenMaxVehiclePhysicalDimension }
);

ValueSet "VehicleComponentMaterialComposition"
(
  <SuperTypeUsage val = "Qualitative" />

  // The following are quality values:

  { "Space",
    "SolidUnspecified",
    "Metal",
    "Plastic" }
);

FloatingPoint approximateAge = 50.3;

String countryNameUnitedStates = "United States of America" ;

// SUPPLEMENT (not listed): the set renamed by the first additional example.
ValueSet "PrimeNumberValueSet" (IntegerConstant);

ValueSet "MyPrimeNumberValueSet" (PrimeNumberValueSet);

ValueSet "MyIntegerValueSet"
(
  IntegerConstant
);

ValueSet "MyValueSetName"
(
  <BaseValueSet ref = Millimeter />
  <SuperTypeUsage val = "LocationalValues" />
  { 1, .. 9999 }
);

ValueSet "SimpleTimelineValueSet"
(
  <SuperTypeUsage val = "LocationalValues" />
  <OrderedCollection val = "true" />
  { "T01",
    "T02" }
);

ValueSet "ChemicalCompositionValueSet"
(
  <SuperTypeUsage val = "QualitativeValues" />
  { "Organic",
    "InOrganic" }
);

ValueSet "Meter"
(
  IntegerConstant
);

// SUPPLEMENT (not listed): the destination set of MeterToFoot.
ValueSet "Foot" (IntegerConstant);

Mapping "MeterToFoot"
(
  <Source ref = Meter />
  <Dest ref = Foot />
  <Function expr = (x$ * 3.2808) />
);

Mapping "MillimeterToMeter"
(
  <Source ref = Millimeter />
  <Dest ref = Meter />
  <Function expr = (x$ / 1000) />
);
