def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
def weeks_to_minutes(weeks):
    minutes_per_week = 10080
    total = 0
    for _ in range(weeks):
        total += minutes_per_week
    return total
