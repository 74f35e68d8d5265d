"""Simulator of UAV-assisted downlink cellular coverage."""

from skyplace._core import (
    Algorithm,
    ChannelMode,
    EnvironmentParams,
    GridPoint,
    HexRegion,
    LinkCondition,
    MetricsRow,
    Position3D,
    RadioProfile,
    ReplicationSummary,
    RunAggregates,
    RunResult,
    SeedSummary,
    SimConfig,
    Stat,
    achievable_rate_bps,
    config_to_ini,
    distance_3d,
    hex_candidate_grid,
    horizontal_distance,
    load_config,
    los_probability,
    manifest_ini,
    noise_power_watts,
    path_loss_db,
    run_episode,
    run_replications,
    sinr_linear,
    summary_json,
    terrestrial_profile,
    timeseries_csv,
    uav_profile,
)

__all__ = [
    "Algorithm",
    "ChannelMode",
    "EnvironmentParams",
    "GridPoint",
    "HexRegion",
    "LinkCondition",
    "MetricsRow",
    "Position3D",
    "RadioProfile",
    "ReplicationSummary",
    "RunAggregates",
    "RunResult",
    "SeedSummary",
    "SimConfig",
    "Stat",
    "achievable_rate_bps",
    "config_to_ini",
    "distance_3d",
    "hex_candidate_grid",
    "horizontal_distance",
    "load_config",
    "los_probability",
    "manifest_ini",
    "noise_power_watts",
    "path_loss_db",
    "run_episode",
    "run_replications",
    "sinr_linear",
    "summary_json",
    "terrestrial_profile",
    "timeseries_csv",
    "uav_profile",
]
