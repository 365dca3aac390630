def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
def incomplete(name, email, age):
    if not name != '' or not email != '' or not age > 0:
        return 'incomplete'
    return 'ok'
