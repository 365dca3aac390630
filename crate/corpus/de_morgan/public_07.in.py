def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

door_open = True
alarm_on = False
safe = not (door_open and alarm_on)
print(safe)
