def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def incomplete(name, email, age):
    if not (name != '' and email != '' and age > 0):
        return 'incomplete'
    return 'ok'
# probe: incomplete('ann', 'a@b.c', 30)
# probe: incomplete('', 'a@b.c', 30)
# probe: incomplete('ann', 'a@b.c', 0)
