namespace spinv {}
