def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def average(values):
    if not values:
        return 0
    total = sum(values)
    return total / len(values)
