//! Periodic beaconing and per-node neighbor tables. Every routing protocol
//! decides next hops from the table its node built out of received beacons,
//! never from global state.

use crate::geom::{NodeId, Position, SimTime, Velocity};
use crate::mobility::VehicleState;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// One-hop broadcast announcing a vehicle's identity and movement.
///
/// Beacons carry velocity on top of id/location/timestamp: the direction and
/// link-lifetime scores both need the neighbor's velocity, so it has to
/// travel in the beacon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Beacon {
    pub sender: NodeId,
    pub pos: Position,
    pub vel: Velocity,
    pub timestamp: SimTime,
}

/// What a node remembers about one neighbor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeighborEntry {
    pub id: NodeId,
    pub last_pos: Position,
    pub last_vel: Velocity,
    pub last_heard: SimTime,
}

/// Beacon period and staleness allowance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BeaconConfig {
    /// Beacon period in seconds.
    pub mu: f64,
    /// Number of consecutive beacons a neighbor may miss before its entry
    /// times out (timeout = alpha * mu).
    pub alpha: u32,
}

impl Default for BeaconConfig {
    fn default() -> Self {
        Self { mu: 0.5, alpha: 3 }
    }
}

impl BeaconConfig {
    pub fn timeout(&self) -> f64 {
        self.alpha as f64 * self.mu
    }
}

/// Per-node neighbor set, keyed by neighbor id for deterministic iteration.
#[derive(Debug, Clone, PartialEq)]
pub struct NeighborTable {
    owner: NodeId,
    entries: BTreeMap<NodeId, NeighborEntry>,
}

impl NeighborTable {
    pub fn new(owner: NodeId) -> Self {
        Self {
            owner,
            entries: BTreeMap::new(),
        }
    }

    pub fn owner(&self) -> NodeId {
        self.owner
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: NodeId) -> Option<&NeighborEntry> {
        self.entries.get(&id)
    }

    pub fn contains(&self, id: NodeId) -> bool {
        self.entries.contains_key(&id)
    }

    /// Entries in ascending id order.
    pub fn iter(&self) -> impl Iterator<Item = &NeighborEntry> {
        self.entries.values()
    }
}

/// Beacon alignment tolerance in seconds. Tick times are accumulated as
/// `index * tick`, so scheduled instants can be off by a few ulps.
const EMIT_EPS: f64 = 1e-6;

/// Emit one beacon per vehicle whenever `now` falls on a multiple of the
/// beacon period. All vehicles start beaconing at t = 0, so emissions stay
/// synchronised for the whole run.
pub fn emit_beacons(states: &[VehicleState], now: SimTime, cfg: &BeaconConfig) -> Vec<Beacon> {
    let t = now.secs();
    let phase = (t / cfg.mu).round();
    if (t - phase * cfg.mu).abs() > EMIT_EPS {
        return Vec::new();
    }
    states
        .iter()
        .map(|s| Beacon {
            sender: s.id,
            pos: s.pos,
            vel: s.vel,
            timestamp: now,
        })
        .collect()
}

/// Insert or refresh the sender's entry. A node never stores itself.
pub fn deliver_beacon(table: &mut NeighborTable, b: &Beacon, now: SimTime) {
    if b.sender == table.owner {
        return;
    }
    table.entries.insert(
        b.sender,
        NeighborEntry {
            id: b.sender,
            last_pos: b.pos,
            last_vel: b.vel,
            last_heard: now,
        },
    );
}

/// Drop every entry older than alpha * mu. The boundary is inclusive: an
/// entry heard exactly alpha * mu ago survives.
pub fn purge_stale(table: &mut NeighborTable, now: SimTime, cfg: &BeaconConfig) {
    let timeout = cfg.timeout();
    table.entries.retain(|_, e| now.since(e.last_heard) <= timeout);
}
