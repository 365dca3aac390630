def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
def grade(score):
    if score >= 50:
        if score >= 80:
            return 'merit'
        else:
            return 'pass'
    else:
        return 'fail'
