#!/usr/bin/env python3
"""Generate the fixture vocabulary under fixtures/vocab/.

The fixture dictionary pins the term IDs used by the golden tests and demo
corpus (sosa:Observation=25, sosa:hasFeatureOfInterest=34, sosa:hasResult=35,
xsd:double=106, qudt:QuantityValue=212, qudt:numericValue=241, qudt:unit=380,
unit:DegreeCelsius=762, apartment/134=3100). SOSA, SSN and XSD are real term
lists and land their targets naturally; the qudt and unit sections mix real
terms with deterministic padding so the remaining targets sit at exact
offsets. Output files are committed; rerunning this script reproduces them
byte for byte.
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from cbl.static_dict import VocabSpec, build_static_dictionary  # noqa: E402

SOSA_CLASSES = [
    "Actuation", "Actuator", "FeatureOfInterest", "ObservableProperty", "Observation",
    "Platform", "Procedure", "Result", "Sample", "Sampler", "Sampling", "Sensor",
]
SOSA_PROPS = [
    "actsOnProperty", "hasFeatureOfInterest", "hasResult", "hasSample", "hasSimpleResult",
    "hostedBy", "isActedOnBy", "isFeatureOfInterestOf", "isHostedBy", "isObservedBy",
    "isResultOf", "isSampleOf", "madeActuation", "madeByActuator", "madeBySampler",
    "madeBySensor", "madeObservation", "madeSampling", "observedProperty", "observes",
    "phenomenonTime", "resultTime", "usedProcedure",
]

SSN_TERMS = [
    "Accuracy", "ActuationRange", "Condition", "Deployment", "DetectionLimit", "Drift",
    "Frequency", "Input", "Latency", "MeasurementRange", "OperatingProperty",
    "OperatingRange", "Output", "Precision", "Property", "Resolution", "ResponseTime",
    "Selectivity", "Sensitivity", "Stimulus", "SurvivalProperty", "SurvivalRange",
    "System", "SystemCapability", "SystemLifetime", "SystemProperty",
    "deployedOnPlatform", "deployedSystem", "detects", "forProperty", "hasDeployment",
    "hasInput", "hasOutput", "hasProperty", "hasSubSystem", "implementedBy",
    "implements", "inDeployment", "isPropertyOf", "isProxyFor", "wasOriginatedBy",
]

XSD_TYPES = [
    "anyURI", "base64Binary", "boolean", "byte", "date", "dateTime", "dateTimeStamp",
    "dayTimeDuration", "decimal", "double", "duration", "float", "gDay", "gMonth",
    "gMonthDay", "gYear", "gYearMonth", "hexBinary", "int", "integer", "language",
    "long", "negativeInteger", "nonNegativeInteger", "nonPositiveInteger",
    "normalizedString", "positiveInteger", "short", "string", "time", "token",
    "unsignedByte", "unsignedInt", "unsignedLong", "unsignedShort", "yearMonthDuration",
]

QUDT_UPPER = [
    "AbsorbedDose", "Acceleration", "Action", "Activity", "Admittance",
    "AmountOfSubstance", "Angle", "AngularAcceleration", "AngularMomentum",
    "AngularVelocity", "Area", "AreaDensity", "AtomicMass", "BaseUnit", "BendingMoment",
    "BulkModulus", "Capacitance", "CatalyticActivity", "ChemicalPotential",
    "Concentration", "Conductance", "Conductivity", "ConstantValue", "CrossSection",
    "Currency", "Curvature", "DataRate", "Density", "DerivedUnit", "Diffusivity",
    "Dimension", "Dimensionless", "DoseEquivalent", "DynamicViscosity", "ElasticModulus",
    "ElectricCharge", "ElectricChargeDensity", "ElectricCurrent", "ElectricField",
    "ElectricFieldStrength", "ElectricFluxDensity", "ElectricPotential", "Energy",
    "EnergyDensity", "EnergyPerArea", "Enumeration", "Exposure", "Force", "ForcePerArea",
    "ForcePerLength", "Frequency", "Heat", "HeatCapacity", "HeatFlowRate",
    "HeatFluxDensity", "Illuminance", "Impedance", "Inductance", "Irradiance",
    "KinematicViscosity", "Length", "LinearAcceleration", "LinearMomentum",
    "LinearVelocity", "LiquidVolume", "Luminance", "LuminousFlux", "LuminousIntensity",
    "MagneticDipoleMoment", "MagneticFieldStrength", "MagneticFlux",
    "MagneticFluxDensity", "Mass", "MassDensity", "MassFlowRate", "MassPerArea",
    "MassPerTime", "MolarConcentration", "MolarEnergy", "MolarHeatCapacity", "MolarMass",
    "MolarVolume", "MomentOfInertia", "Momentum", "Permittivity", "PlaneAngle", "Power",
    "PowerPerArea", "Pressure", "Quantity", "QuantityKind", "QuantityKindCategory",
    "QuantityType",
]
QUDT_MID = [
    "RadiantIntensity", "Resistance", "SolidAngle", "SpecificEnergy", "SpecificHeatCapacity",
    "Stress", "SystemOfQuantities", "SystemOfUnits", "Temperature", "Time", "Torque",
    "Unit", "Velocity", "Volume", "abbreviation", "baseDimensionEnumeration", "basis",
    "categorizedAs", "code", "conversionMultiplier", "conversionOffset", "currencyCode",
    "dataEncoding", "dataType", "dimensionVector", "exactMatch", "expression",
    "hasQuantityKind", "hasUnit", "literal", "mathsDefinition",
]
QUDT_LOWER_TAIL = [
    "outOfScope", "plainTextDescription", "qkdvDenominator", "qkdvNumerator", "quantity",
    "quantityValue", "relevantQuantityKind", "relevantUnit", "scalingOf",
    "siUnitsExpression", "symbol", "systemDerivedQuantityKind", "systemDimension",
    "typeGuard", "ucumCaseInsensitiveCode", "ucumCaseSensitiveCode", "ucumCode",
]
QUDT_AFTER_UNIT = ["url", "value"]

UNIT_BASES = [
    "Ampere", "Angstrom", "Atmosphere", "Bar", "Becquerel", "Bit", "Byte", "Calorie",
    "Candela", "Carat", "Coulomb", "Day", "Decibel", "DegreeAngle", "DegreeCelsius",
    "DegreeFahrenheit", "Electronvolt", "Farad", "Foot", "Gauss", "Gram", "Gray",
    "Hectare", "Henry", "Hertz", "Hour", "Inch", "Joule", "Katal", "Kelvin", "Knot",
    "Liter", "Lumen", "Lux", "Meter", "Mile", "Minute", "Mole", "Newton", "Ohm",
    "Pascal", "Percent", "Poise", "Radian", "Second", "Siemens", "Sievert", "Steradian",
    "Tesla", "Tonne", "Volt", "Watt", "Weber", "Yard", "Year",
]
UNIT_PREFIXES = [
    "Atto", "Centi", "Deca", "Deci", "Exa", "Femto", "Giga", "Hecto", "Kilo", "Mega",
    "Micro", "Milli", "Nano", "Peta", "Pico", "Tera", "Yocto", "Yotta", "Zepto", "Zetta",
]
_PREFIXABLE = [
    "Ampere", "Bar", "Becquerel", "Candela", "Coulomb", "Farad", "Gram", "Gray", "Henry",
    "Hertz", "Joule", "Katal", "Kelvin", "Liter", "Lumen", "Lux", "Meter", "Mole",
    "Newton", "Ohm", "Pascal", "Second", "Siemens", "Sievert", "Tesla", "Volt", "Watt",
    "Weber",
]

CUSTOM_TERMS = [
    "apartment/134",
    "apartment/134#electricConsumption",
    "apartment/134#temperature",
    "apartment/134#temperature-difference",
    "sensor/926",
    "sensor/35-4",
    "sensor/35-4#rotationSpeed",
    "earthAtmosphere",
    "forest/kielderForest",
    "forest/kielderForest/tree/124",
    "forest/kielderForest/tree/124#height",
    "iceCore/GRIP",
    "observatory/hekla/seismograph4",
    "observatory/hekla/seismograph4#groundAcceleration",
    "station/heklaNorthSlope",
    "windSensor/35",
]

TARGETS = {
    "sosa:Observation": 25,
    "sosa:hasFeatureOfInterest": 34,
    "sosa:hasResult": 35,
    "xsd:double": 106,
    "qudt-1-1:QuantityValue": 212,
    "qudt-1-1:numericValue": 241,
    "qudt-1-1:unit": 380,
    "qudt-unit-1-1:DegreeCelsius": 762,
    "apartment/134": 3100,
}


def _take_sorted(pool, count, why):
    pool = sorted(set(pool))
    if len(pool) < count:
        raise SystemExit(f"pool for {why} has {len(pool)} terms, need {count}")
    return pool[:count]


def build_qudt_section():
    # offsets inside the section: QuantityValue=79, numericValue=108, unit=247
    upper = _take_sorted((t for t in QUDT_UPPER if t < "QuantityValue"), 79, "qudt upper")
    mid = _take_sorted(
        (t for t in QUDT_MID if "QuantityValue" < t < "numericValue"), 28, "qudt mid"
    )
    lower_pool = [t for t in QUDT_LOWER_TAIL if "numericValue" < t < "unit"]
    lower_pool += [f"padding-{i:03d}" for i in range(160)]  # deterministic filler props
    lower = _take_sorted(lower_pool, 138, "qudt lower")
    section = upper + ["QuantityValue"] + mid + ["numericValue"] + lower + ["unit"]
    section += QUDT_AFTER_UNIT
    return [f"qudt-1-1:{t}" for t in section]


def build_unit_section():
    pool = set(UNIT_BASES)
    pool.update(p + b for p in UNIT_PREFIXES for b in _PREFIXABLE)
    pool.update(f"{a}Per{b}" for a in _PREFIXABLE for b in _PREFIXABLE if a != b)
    pool.update(
        f"{p}{a}Per{b}"
        for p in ("Atto", "Centi", "Deca", "Deci", "Kilo", "Micro", "Milli")
        for a in _PREFIXABLE
        for b in _PREFIXABLE
        if a != b
    )
    pool.discard("DegreeCelsius")
    before = _take_sorted((t for t in pool if t < "DegreeCelsius"), 379, "units before")
    after = _take_sorted((t for t in pool if t > "DegreeCelsius"), 2717 - 379 - 1, "units after")
    return [f"qudt-unit-1-1:{t}" for t in before + ["DegreeCelsius"] + after]


def main():
    out_dir = ROOT / "fixtures" / "vocab"
    out_dir.mkdir(parents=True, exist_ok=True)
    sections = [
        ("sosa", [f"sosa:{t}" for t in SOSA_CLASSES + SOSA_PROPS]),
        ("ssn", [f"ssn:{t}" for t in SSN_TERMS]),
        ("xsd", [f"xsd:{t}" for t in XSD_TYPES]),
        ("qudt", build_qudt_section()),
        ("unit", build_unit_section()),
    ]
    for name, terms in sections:
        (out_dir / f"{name}.txt").write_text("\n".join(sorted(set(terms))) + "\n")
    (out_dir / "custom-terms.txt").write_text("\n".join(CUSTOM_TERMS) + "\n")

    spec = VocabSpec(ontologies=[(n, t) for n, t in sections], custom=CUSTOM_TERMS)
    d = build_static_dictionary(spec)
    for term, want in TARGETS.items():
        got = d.lookup_id(term)
        assert got == want, f"{term}: got {got}, want {want}"
    print(f"{len(d)} terms, fingerprint {d.fingerprint.hex()}")
    for term, want in TARGETS.items():
        print(f"  {term} = {want}")


if __name__ == "__main__":
    main()
