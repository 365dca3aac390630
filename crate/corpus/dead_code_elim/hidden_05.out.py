def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def countdown(n):
    seen = []
    while n > 0:
        seen.append(n)
        n -= 1
    return seen
