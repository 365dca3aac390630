def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def to_seconds(hours, minutes):
    per_hour = 60 * 60
    per_minute = 60
    return hours * per_hour + minutes * per_minute
