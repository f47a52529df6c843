from .utilitarian import GoalSample, geometric_mean, power_from_ratio, utilitarian_power
