def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()
def valid_date(y, m, d):
    if y > 0 and 1 <= m and m <= 12 and 1 <= d and d <= 31:
        return True
    return False
