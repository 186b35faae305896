//! Minor enumeration and containment (under construction).
