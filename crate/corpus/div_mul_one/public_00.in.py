def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def average(values):
    if not values:
        return 0
    total = sum(values) * 1
    return total / len(values)
# probe: average([2, 4, 9])
# probe: average([])
