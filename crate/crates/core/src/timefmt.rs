//! Timestamp handling. All timestamps are UTC at second precision, rendered
//! as `YYYY-MM-DDThh:mm:ssZ`; parsing accepts any RFC 3339 offset and
//! truncates sub-second precision.

use chrono::{DateTime, Months, SubsecRound, Utc};

pub const FORMAT: &str = "%Y-%m-%dT%H:%M:%SZ";

pub fn format_timestamp(ts: DateTime<Utc>) -> String {
    ts.format(FORMAT).to_string()
}

pub fn parse_timestamp(s: &str) -> Result<DateTime<Utc>, chrono::ParseError> {
    DateTime::parse_from_rfc3339(s).map(|dt| dt.with_timezone(&Utc).trunc_subsecs(0))
}

/// Calendar-month label (`YYYY-MM`) of a timestamp, used by the
/// distinct-active-months signals.
pub fn month_label(ts: DateTime<Utc>) -> String {
    ts.format("%Y-%m").to_string()
}

/// Lower bound of the half-open window `(end - months, end]`, clamping the
/// day of month where the target month is shorter.
pub fn months_before(end: DateTime<Utc>, months: u32) -> DateTime<Utc> {
    end.checked_sub_months(Months::new(months))
        .expect("timestamp out of range")
}

/// Serde adapter for mandatory second-precision timestamps.
pub mod ts {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(ts: &DateTime<Utc>, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&format_timestamp(*ts))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<DateTime<Utc>, D::Error> {
        let s = String::deserialize(de)?;
        parse_timestamp(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for optional timestamps (serialized as `null` when absent).
pub mod ts_opt {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        ts: &Option<DateTime<Utc>>,
        ser: S,
    ) -> Result<S::Ok, S::Error> {
        match ts {
            Some(t) => ser.serialize_some(&format_timestamp(*t)),
            None => ser.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        de: D,
    ) -> Result<Option<DateTime<Utc>>, D::Error> {
        let s = Option::<String>::deserialize(de)?;
        s.map(|s| parse_timestamp(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_is_second_precision() {
        let ts = parse_timestamp("2021-06-01T12:34:56.789+02:00").unwrap();
        assert_eq!(format_timestamp(ts), "2021-06-01T10:34:56Z");
    }

    #[test]
    fn month_window_clamps_short_months() {
        let end = parse_timestamp("2021-03-31T12:00:00Z").unwrap();
        assert_eq!(
            format_timestamp(months_before(end, 1)),
            "2021-02-28T12:00:00Z"
        );
        assert_eq!(
            format_timestamp(months_before(end, 12)),
            "2020-03-31T12:00:00Z"
        );
    }

    #[test]
    fn month_labels() {
        let ts = parse_timestamp("2020-11-05T00:00:00Z").unwrap();
        assert_eq!(month_label(ts), "2020-11");
    }
}
