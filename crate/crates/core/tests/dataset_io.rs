use std::fs;

use sensor_mcda::datagen::{
    descriptor_path, generate, load_dataset, project_properties, save_dataset, DatasetError,
    GeneratorConfig,
};

fn saved(n: usize, seed: u64) -> (tempfile::TempDir, std::path::PathBuf) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pool.csv");
    save_dataset(&generate(&GeneratorConfig::new(n, seed)).unwrap(), &path).unwrap();
    (dir, path)
}

#[test]
fn round_trip_is_exact() {
    let m = generate(&GeneratorConfig::new(500, 9)).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pool.csv");
    save_dataset(&m, &path).unwrap();
    assert!(descriptor_path(&path).ends_with("pool.criteria.json"));
    let back = load_dataset(&path).unwrap();
    assert_eq!(back, m);
    assert_eq!(back.option_ids()[499], "s000499");
}

#[test]
fn csv_layout() {
    let (_dir, path) = saved(2, 1);
    let text = fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "id,battery,price,drift,frequency,energy_consumption,response_time"
    );
    assert!(lines.next().unwrap().starts_with("s000000,"));
    assert_eq!(lines.count(), 1);
}

#[test]
fn missing_descriptor_names_the_path() {
    let (_dir, path) = saved(3, 1);
    let desc = descriptor_path(&path);
    fs::remove_file(&desc).unwrap();
    let err = load_dataset(&path).unwrap_err();
    assert!(matches!(err, DatasetError::MissingDescriptor(ref p) if *p == desc));
    assert!(err.is_io());
    assert!(err.to_string().contains("pool.criteria.json"));
}

#[test]
fn header_and_descriptor_must_agree() {
    let (_dir, path) = saved(3, 1);
    let text = fs::read_to_string(&path).unwrap().replacen("drift", "jitter", 1);
    fs::write(&path, text).unwrap();
    let msg = load_dataset(&path).unwrap_err().to_string();
    assert!(msg.contains("jitter") && msg.contains("drift"), "{msg}");
}

#[test]
fn bad_cell_reports_line_and_column() {
    let (_dir, path) = saved(3, 1);
    let text = fs::read_to_string(&path).unwrap();
    let mut lines: Vec<String> = text.lines().map(str::to_owned).collect();
    let mut fields: Vec<&str> = lines[2].split(',').collect();
    fields[3] = "abc";
    lines[2] = fields.join(",");
    fs::write(&path, lines.join("\n") + "\n").unwrap();
    match load_dataset(&path).unwrap_err() {
        DatasetError::Parse { line, column, .. } => assert_eq!((line, column), (3, 4)),
        other => panic!("unexpected {other}"),
    }
}

#[test]
fn short_row_is_rejected() {
    let (_dir, path) = saved(2, 1);
    let mut text = fs::read_to_string(&path).unwrap();
    text.push_str("s000002,1,2\n");
    fs::write(&path, text).unwrap();
    assert!(matches!(
        load_dataset(&path).unwrap_err(),
        DatasetError::Parse { line: 4, .. }
    ));
}

#[test]
fn invalid_values_are_rejected() {
    let (_dir, path) = saved(2, 1);
    let text = fs::read_to_string(&path).unwrap();
    let mut lines: Vec<String> = text.lines().map(str::to_owned).collect();
    let mut fields: Vec<&str> = lines[1].split(',').collect();
    fields[1] = "NaN";
    lines[1] = fields.join(",");
    fs::write(&path, lines.join("\n") + "\n").unwrap();
    let err = load_dataset(&path).unwrap_err();
    assert!(matches!(err, DatasetError::Model(_)), "{err}");
    assert!(!err.is_io());
}

#[test]
fn malformed_descriptor() {
    let (_dir, path) = saved(2, 1);
    fs::write(descriptor_path(&path), "[{\"name\": \"battery\"}]").unwrap();
    assert!(matches!(
        load_dataset(&path).unwrap_err(),
        DatasetError::Descriptor { .. }
    ));
}

#[test]
fn projection_bounds() {
    let m = generate(&GeneratorConfig::new(4, 2)).unwrap();
    for bad in [0, 1, 7] {
        assert!(matches!(
            project_properties(&m, bad),
            Err(DatasetError::PropertyCount { got, max: 6 }) if got == bad
        ));
    }
    let p = project_properties(&m, 2).unwrap();
    assert_eq!(p.criteria().names(), vec!["battery", "price"]);
}
