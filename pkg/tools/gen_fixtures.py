#!/usr/bin/env python3
"""Build the SSN corpus fixture files (examples 10, 12, 14, 17, 19).

Example 1 is the worked micro-example and is maintained by hand. The rest
are deterministic reconstructions of the corpus domains (electric
consumption, tree height, seismograph, wind sensor, ice core CO2) sized to
the reference corpus figures.
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
OUT = ROOT / "fixtures" / "ssn"


def node(**pairs):
    return dict(pairs)


def ref(iri):
    return {"@id": iri}


def typed(datatype, value):
    return {"@type": datatype, "@value": value}


def obs(iri, foi, prop, sensor, result, when, result_key="sosa:hasSimpleResult"):
    n = {
        "@id": iri,
        "@type": "sosa:Observation",
        "sosa:hasFeatureOfInterest": ref(foi),
        "sosa:observedProperty": ref(prop),
        "sosa:madeBySensor": ref(sensor),
        result_key: result,
        "sosa:resultTime": typed("xsd:dateTime", when),
    }
    return n


def ssn_10():
    """Electric consumption of an apartment: one meter, a minute of readings."""
    graph = [
        {"@id": "apartment/134", "@type": "sosa:FeatureOfInterest"},
        {
            "@id": "sensor/926",
            "@type": "sosa:Sensor",
            "sosa:observes": ref("apartment/134#electricConsumption"),
        },
    ]
    readings = [
        "0.243", "0.251", "0.248", "0.262", "0.255", "0.249",
        "0.267", "0.271", "0.258", "0.246", "0.253",
    ]
    for i, kw in enumerate(readings):
        graph.append(
            obs(
                f"apartment/134/consumption/{3001 + i}",
                "apartment/134",
                "apartment/134#electricConsumption",
                "sensor/926",
                kw,
                f"2017-06-06T12:36:{2 + 5 * i:02d}",
            )
        )
    return {"@graph": graph}


def ssn_12():
    """Sensor used to observe tree height; results are quantity values."""
    graph = [
        {"@id": "forest/kielderForest", "@type": "sosa:FeatureOfInterest"},
        {
            "@id": "forest/kielderForest/tree/124",
            "@type": "sosa:FeatureOfInterest",
            "sosa:isSampleOf": ref("forest/kielderForest"),
        },
        {
            "@id": "sensor/tree-height-laser-2",
            "@type": "sosa:Sensor",
            "sosa:observes": ref("forest/kielderForest/tree/124#height"),
        },
    ]
    heights = ["12.3", "12.5", "12.8", "13.1"]
    for i, meters in enumerate(heights):
        bn = f"_:b70{i}"
        graph.append(
            {
                "@id": f"forest/kielderForest/tree/124/heightObs/{1861 + i}",
                "@type": "sosa:Observation",
                "sosa:hasFeatureOfInterest": ref("forest/kielderForest/tree/124"),
                "sosa:observedProperty": ref("forest/kielderForest/tree/124#height"),
                "sosa:madeBySensor": ref("sensor/tree-height-laser-2"),
                "sosa:hasResult": ref(bn),
                "sosa:resultTime": typed("xsd:dateTime", f"201{1 + i}-06-06T12:36:12"),
            }
        )
        graph.append(
            {
                "@id": bn,
                "@type": "qudt-1-1:QuantityValue",
                "qudt-1-1:numericValue": typed("xsd:double", meters),
                "qudt-1-1:unit": ref("qudt-unit-1-1:Meter"),
            }
        )
    return {"@graph": graph}


def ssn_14():
    """Observation of a seismograph: platform, sensor, acceleration series."""
    graph = [
        {"@id": "station/heklaNorthSlope", "@type": "sosa:Platform"},
        {
            "@id": "observatory/hekla/seismograph4",
            "@type": "sosa:Sensor",
            "sosa:isHostedBy": ref("station/heklaNorthSlope"),
            "sosa:observes": ref("observatory/hekla/seismograph4#groundAcceleration"),
        },
    ]
    samples = ["0.0034", "0.0041", "0.0171", "0.0598"]
    for i, g in enumerate(samples):
        bn = f"_:a41{i}"
        graph.append(
            {
                "@id": f"observatory/hekla/seismograph4/obs/{5120 + i}",
                "@type": "sosa:Observation",
                "sosa:hasFeatureOfInterest": ref("earthAtmosphere"),
                "sosa:observedProperty": ref(
                    "observatory/hekla/seismograph4#groundAcceleration"
                ),
                "sosa:madeBySensor": ref("observatory/hekla/seismograph4"),
                "sosa:hasResult": ref(bn),
                "sosa:phenomenonTime": typed("xsd:dateTime", f"2017-06-06T12:36:{12 + i:02d}"),
            }
        )
        graph.append(
            {
                "@id": bn,
                "@type": "qudt-1-1:QuantityValue",
                "qudt-1-1:numericValue": typed("xsd:double", g),
                "qudt-1-1:unit": ref("qudt-unit-1-1:MeterPerSecondSquared"),
            }
        )
    return {"@graph": graph}


def ssn_17():
    """Movements of the spinning cups on a wind sensor."""
    graph = [
        {
            "@id": "windSensor/35",
            "@type": ["sosa:Sensor", "ssn:System"],
            "sosa:isHostedBy": ref("station/heklaNorthSlope"),
            "sosa:observes": ref("sensor/35-4#rotationSpeed"),
        },
        {
            "@id": "sensor/35-4",
            "@type": "sosa:Sensor",
            "ssn:hasSubSystem": ref("windSensor/35"),
        },
    ]
    speeds = ["11.8", "12.1", "12.9", "13.6", "12.4"]
    for i, rpm in enumerate(speeds):
        graph.append(
            obs(
                f"windSensor/35/rotation/obs/{401 + i}",
                "earthAtmosphere",
                "sensor/35-4#rotationSpeed",
                "sensor/35-4",
                rpm,
                f"2017-06-06T12:36:{2 + 10 * i:02d}",
            )
        )
    return {"@graph": graph}


def ssn_19():
    """CO2 level observed in an ice core."""
    graph = [
        {
            "@id": "iceCore/GRIP",
            "@type": "sosa:Sample",
            "sosa:isSampleOf": ref("earthAtmosphere"),
        },
    ]
    ppm = ["291.4", "284.2", "287.9", "290.3", "288.6"]
    for i, level in enumerate(ppm):
        graph.append(
            obs(
                f"iceCore/GRIP/co2/obs/{9210 + i}",
                "iceCore/GRIP",
                "earthAtmosphere",
                "sensor/926",
                level,
                f"2017-06-06T12:36:{12 + 3 * i:02d}",
            )
        )
    return {"@graph": graph}


BUILDERS = {
    "ssn-example-10": ssn_10,
    "ssn-example-12": ssn_12,
    "ssn-example-14": ssn_14,
    "ssn-example-17": ssn_17,
    "ssn-example-19": ssn_19,
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, build in BUILDERS.items():
        path = OUT / f"{name}.jsonld"
        path.write_text(json.dumps(build(), indent=2) + "\n", encoding="utf-8")
        print(f"{path.name}: {path.stat().st_size} bytes")


if __name__ == "__main__":
    main()
