def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def weeks_to_minutes(weeks):
    minutes_per_week = 7 * 24 * 60
    total = 0
    for _ in range(weeks):
        total += minutes_per_week
    return total
# probe: weeks_to_minutes(2)
